"""Regenerate the SHJ level tables and the catalog sweep as TSV files.

usage: python3 scripts/reproduce_tables.py [OUTDIR] [--sum-rounded-levels]
"""

import argparse
from pathlib import Path

from conceptcx.tables import shj_document, sweep_document


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("outdir", nargs="?", default="out")
    ap.add_argument("--sum-rounded-levels", action="store_true")
    ap.add_argument("--precision", type=int, default=2)
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    docs = {
        "shj_min.tsv": shj_document("min", args.precision, sum_rounded_levels=args.sum_rounded_levels),
        "shj_mean.tsv": shj_document("mean", args.precision, sum_rounded_levels=args.sum_rounded_levels),
        "sweep.tsv": sweep_document(args.precision, args.sum_rounded_levels),
    }
    for name, doc in docs.items():
        (out / name).write_text(doc.to_tsv())
        print(f"wrote {out / name}")


if __name__ == "__main__":
    main()
