"""Command-line front end.

Exit status: 0 success, 2 usage error, 3 parse error, 4 range error,
5 data error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import DataError, ParseError, RangeError
from .stats import (
    DEFAULT_EPSILON,
    compare_orders,
    induced_order,
    r_squared,
    read_dataset,
    spearman_rho,
    pearson,
)
from .structures import parse_structure
from .tables import (
    DEFAULT_PRECISION,
    METRICS,
    OutputDocument,
    Section,
    enumerate_document,
    metric_document,
    metric_value,
    shj_document,
    sweep_document,
)

EXIT_OK = 0
EXIT_PARSE = 3
EXIT_RANGE = 4
EXIT_DATA = 5


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("tsv", "json"), default="tsv")
    p.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                   help="decimal places shown in TSV output (default: %(default)s)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conceptcx",
        description="Complexity metrics for Boolean category structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("metric", help="metrics for one structure")
    p.add_argument("structure", help='e.g. "000,001,110,111" or "{00|11}"')
    p.add_argument("--dims", type=int, help="number of dimensions (default: token length)")
    p.add_argument("--metric", choices=(*METRICS, "all"), default="all")
    p.add_argument("--per-level", action="store_true", help="add u(0..d) and U(n) rows")
    _add_output_flags(p)

    p = sub.add_parser("enumerate", help="one row per equivalence class of D[P]")
    p.add_argument("--dims", type=int, required=True)
    p.add_argument("-p", "--size", type=int, required=True, help="size of category A")
    _add_output_flags(p)

    p = sub.add_parser("tables", help="reproduce the SHJ and catalog tables")
    p.add_argument("table", choices=("shj-min", "shj-mean", "sweep"))
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON, help="tie tolerance for orders")
    p.add_argument("--sum-rounded-levels", action="store_true",
                   help="total = sum of per-level values rounded to --precision")
    _add_output_flags(p)

    p = sub.add_parser("fit", help="compare a metric with human error rates")
    p.add_argument("--data", required=True, help="CSV with header structure,error_rate")
    p.add_argument("--metric", choices=METRICS, default="umin")
    p.add_argument("--stat", choices=("r2", "spearman", "order"), default="r2")
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON,
                   help="tie tolerance for the metric order (data order uses 0)")
    _add_output_flags(p)
    return parser


def cmd_metric(args) -> OutputDocument:
    s = parse_structure(args.structure, args.dims)
    return metric_document(s, args.metric, args.per_level, args.precision)


def cmd_enumerate(args) -> OutputDocument:
    return enumerate_document(args.dims, args.size, args.precision)


def cmd_tables(args) -> OutputDocument:
    if args.table == "sweep":
        return sweep_document(args.precision, args.sum_rounded_levels)
    agg = args.table.split("-", 1)[1]
    return shj_document(agg, args.precision, args.epsilon, args.sum_rounded_levels)


def cmd_fit(args) -> OutputDocument:
    data = read_dataset(args.data)
    scores = [metric_value(s, args.metric) for s in data.structures]
    rates = data.error_rates
    base = {"metric": args.metric, "dataset": data.label, "n": len(rates)}
    if args.stat == "r2":
        r = pearson(scores, rates)
        row = {**base, "stat": "r2", "value": r_squared(scores, rates),
               "sign": None if r is None else ("+" if r >= 0 else "-")}
        return OutputDocument([Section("fit", list(row), [row])], args.precision)
    if args.stat == "spearman":
        row = {**base, "stat": "spearman", "value": spearman_rho(scores, rates)}
        return OutputDocument([Section("fit", list(row), [row])], args.precision)

    position = {k: i for i, k in enumerate(data.keys)}
    predicted = induced_order(dict(zip(data.keys, scores)), args.epsilon)
    observed = induced_order(dict(zip(data.keys, rates)), 0.0)
    agreement = compare_orders(predicted, observed)
    orders = Section("orders", ["source", "order"], [
        {"source": f"predicted ({args.metric})", "order": predicted.format(sort_key=position.get)},
        {"source": "observed", "order": observed.format(sort_key=position.get)},
    ])
    row = {**base, "concordant": agreement.concordant, "discordant": agreement.discordant,
           "tie_disagreements": agreement.tie_disagreements, "exact_match": agreement.exact_match}
    return OutputDocument([orders, Section("agreement", list(row), [row])], args.precision)


COMMANDS = {
    "metric": cmd_metric,
    "enumerate": cmd_enumerate,
    "tables": cmd_tables,
    "fit": cmd_fit,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RangeError as exc:
        print(f"range error: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except DataError as exc:
        print(f"data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    sys.stdout.write(doc.render(args.format))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
