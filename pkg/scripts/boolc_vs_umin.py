"""Boolean complexity next to u_min for every catalog row, with per-block
order agreement between the two."""

from conceptcx import aggregate_metric, boolean_complexity, compare_orders, induced_order
from conceptcx.catalog import BLOCKS, block_rows


def main():
    for block in BLOCKS:
        rows = block_rows(block)
        boolc = {r.row: boolean_complexity(r.structure) for r in rows}
        umin = {r.row: aggregate_metric(r.structure, "min").u_hat for r in rows}
        print(f"## {block}")
        for r in rows:
            b = boolc[r.row]
            print(f"  {r.name:24} umin={umin[r.row]:.3f} boolc={b.literal_count:2d}  {b.formula_text}")
        if len(rows) > 1:
            rep = compare_orders(
                induced_order({k: v.literal_count for k, v in boolc.items()}, 0),
                induced_order(umin),
            )
            print(f"  concordant={rep.concordant} discordant={rep.discordant} "
                  f"tie_disagreements={rep.tie_disagreements}")


if __name__ == "__main__":
    main()
