"""Metric reports and the published tables, as renderable documents.

Documents keep full-precision values; rounding happens only when a TSV is
rendered. JSON output carries the raw values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from decimal import ROUND_HALF_EVEN, Decimal

from .boolcomp import BoolComplexityResult, boolean_complexity
from .catalog import BLOCKS, SHJ_LABELS, block_rows, shj_types
from .gist import StructuralManifold, structural_manifold
from .infocomp import MEAN, MIN, LevelProfile, aggregate_metric
from .stats import DEFAULT_EPSILON, induced_order
from .structures import CategoryStructure, enumerate_classes

DEFAULT_PRECISION = 2


def round_half_even(x: float, precision: int = DEFAULT_PRECISION) -> Decimal:
    return Decimal(repr(x)).quantize(Decimal(1).scaleb(-precision), rounding=ROUND_HALF_EVEN)


@dataclass
class Section:
    name: str
    columns: list[str]
    rows: list[dict] = field(default_factory=list)


@dataclass
class OutputDocument:
    sections: list[Section]
    precision: int = DEFAULT_PRECISION

    def section(self, name: str) -> Section:
        for s in self.sections:
            if s.name == name:
                return s
        raise KeyError(name)

    def _cell(self, v) -> str:
        if isinstance(v, bool):
            return str(v).lower()
        if isinstance(v, float):
            return str(round_half_even(v, self.precision))
        if v is None:
            return "NA"
        return str(v)

    def to_tsv(self) -> str:
        blocks = []
        for sec in self.sections:
            lines = [f"# {sec.name}", "\t".join(sec.columns)]
            lines += ["\t".join(self._cell(r.get(c)) for c in sec.columns) for r in sec.rows]
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    def to_json(self) -> str:
        doc = {
            "precision": self.precision,
            "sections": [
                {"name": s.name, "columns": s.columns, "rows": s.rows} for s in self.sections
            ],
        }
        return json.dumps(doc, indent=2, allow_nan=False)

    def render(self, fmt: str = "tsv") -> str:
        return self.to_json() + "\n" if fmt == "json" else self.to_tsv()


@dataclass(frozen=True)
class MetricReport:
    structure: CategoryStructure
    umin: LevelProfile
    umean: LevelProfile
    boolc: BoolComplexityResult
    manifold: StructuralManifold

    @property
    def phi_hat(self) -> float:
        return self.manifold.phi_hat


def metric_report(s: CategoryStructure) -> MetricReport:
    return MetricReport(
        s, aggregate_metric(s, MIN), aggregate_metric(s, MEAN),
        boolean_complexity(s), structural_manifold(s),
    )


METRICS = ("umin", "umean", "boolc", "gist")


def metric_value(s: CategoryStructure, name: str) -> float:
    """Difficulty score for a metric name; higher means harder.

    ``gist`` returns ``-phi_hat`` so that all scores point the same way.
    """
    if name == "umin":
        return aggregate_metric(s, MIN).u_hat
    if name == "umean":
        return aggregate_metric(s, MEAN).u_hat
    if name == "boolc":
        return float(boolean_complexity(s).literal_count)
    if name == "gist":
        return -structural_manifold(s).phi_hat
    raise ValueError(f"unknown metric {name!r}; choose from {', '.join(METRICS)}")


def metric_document(s: CategoryStructure, metric: str = "all", per_level: bool = False,
                    precision: int = DEFAULT_PRECISION) -> OutputDocument:
    wanted = METRICS if metric == "all" else (metric,)
    for m in wanted:
        if m not in METRICS:
            raise ValueError(f"unknown metric {m!r}")
    rep = metric_report(s)
    row: dict = {"structure": str(s), "dims": s.dims}
    cols = ["structure", "dims"]
    if "umin" in wanted:
        row["umin"] = rep.umin.u_hat
        cols.append("umin")
    if "umean" in wanted:
        row["umean"] = rep.umean.u_hat
        cols.append("umean")
    if "boolc" in wanted:
        row["boolc"] = rep.boolc.literal_count
        row["formula"] = rep.boolc.formula_text
        cols += ["boolc", "formula"]
    if "gist" in wanted:
        row["manifold"] = str(rep.manifold)
        row["phi_hat"] = rep.phi_hat
        cols += ["manifold", "phi_hat"]
    sections = [Section("metric", cols, [row])]
    if per_level:
        profiles = [p for name, p in (("umin", rep.umin), ("umean", rep.umean))
                    if name in wanted] or [rep.umin, rep.umean]
        lcols = ["aggregator"] + [f"u{n}" for n in range(s.dims + 1)] + ["u_hat"]
        sections.append(Section("levels", lcols, [p.as_record() for p in profiles]))
        vcols = ["n", "U"]
        vrows = [{"n": n, "U": "(" + ",".join(str(round_half_even(u, precision)) for u in vec) + ")",
                  "U_full": list(vec)} for n, vec in enumerate(rep.umin.u_vectors)]
        sections.append(Section("uncertainty_vectors", vcols, vrows))
    return OutputDocument(sections, precision)


def enumerate_document(dims: int, p: int, precision: int = DEFAULT_PRECISION) -> OutputDocument:
    cols = ["id", "a_set", "umin", "umean", "boolc", "phi_hat"]
    rows = []
    for k, s in enumerate(enumerate_classes(dims, p), 1):
        rep = metric_report(s)
        rows.append({"id": f"{dims}[{p}]-{k}", "a_set": str(s), "umin": rep.umin.u_hat,
                     "umean": rep.umean.u_hat, "boolc": rep.boolc.literal_count,
                     "phi_hat": rep.phi_hat})
    return OutputDocument([Section(f"{dims}[{p}]", cols, rows)], precision)


def _table_total(profile: LevelProfile, sum_rounded_levels: bool, precision: int) -> float:
    if sum_rounded_levels:
        return float(sum(round_half_even(v, precision) for v in profile.u_levels))
    return profile.u_hat


def shj_document(aggregator: str = "min", precision: int = DEFAULT_PRECISION,
                 epsilon: float = DEFAULT_EPSILON, sum_rounded_levels: bool = False) -> OutputDocument:
    """Per-level values and the total for SHJ types I-VI, with induced orders."""
    g = MIN if aggregator == "min" else MEAN
    profiles = {label: aggregate_metric(s, g) for label, s in shj_types().items()}
    cols = ["row", *SHJ_LABELS, "order"]
    rows = []
    roman = {lab: k for k, lab in enumerate(SHJ_LABELS)}
    for n in range(4):
        vals = {lab: profiles[lab].u_levels[n] for lab in SHJ_LABELS}
        order = induced_order(vals, epsilon).format(sort_key=roman.get)
        rows.append({"row": f"u_{g.kind}({n})", **vals, "order": order})
    totals = {lab: _table_total(profiles[lab], sum_rounded_levels, precision) for lab in SHJ_LABELS}
    order = induced_order(totals, epsilon)
    rows.append({"row": f"uhat_{g.kind}", **totals, "order": order.format(sort_key=roman.get)})
    return OutputDocument([Section(f"shj-{g.kind}", cols, rows)], precision)


def sweep_rows(sum_rounded_levels: bool = False, precision: int = DEFAULT_PRECISION) -> list[dict]:
    rows = []
    for block in BLOCKS:
        for r in block_rows(block):
            lo = aggregate_metric(r.structure, MIN)
            hi = aggregate_metric(r.structure, MEAN)
            rows.append({
                "block": block, "row": r.row, "label": r.label, "a_set": str(r.structure),
                "umin": _table_total(lo, sum_rounded_levels, precision),
                "umean": _table_total(hi, sum_rounded_levels, precision),
            })
    return rows


def sweep_document(precision: int = DEFAULT_PRECISION, sum_rounded_levels: bool = False) -> OutputDocument:
    cols = ["block", "row", "label", "a_set", "umin", "umean"]
    return OutputDocument([Section("sweep", cols, sweep_rows(sum_rounded_levels, precision))], precision)
