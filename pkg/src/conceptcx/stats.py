"""Difficulty orderings and agreement statistics against human error rates."""

from __future__ import annotations

import csv
import itertools
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Mapping, Sequence

from .errors import DataError, ParseError, RangeError
from .structures import CategoryStructure, parse_structure

DEFAULT_EPSILON = 1e-9


@dataclass(frozen=True)
class OrderedPartition:
    """Tie groups from easiest to hardest."""

    groups: tuple[frozenset, ...]
    epsilon: float = 0.0

    def __post_init__(self):
        seen = set()
        for g in self.groups:
            if not g:
                raise ValueError("empty tie group")
            if seen & g:
                raise ValueError("tie groups overlap")
            seen |= g

    @property
    def items(self) -> frozenset:
        return frozenset().union(*self.groups) if self.groups else frozenset()

    def rank_of(self) -> dict:
        return {item: k for k, g in enumerate(self.groups) for item in g}

    def format(self, sort_key=str) -> str:
        parts = []
        for g in self.groups:
            names = sorted(g, key=sort_key)
            parts.append(names[0] if len(names) == 1 else "{" + ",".join(map(str, names)) + "}")
        return " < ".join(map(str, parts))

    def __str__(self) -> str:
        return self.format()


def induced_order(values: Mapping[Hashable, float], epsilon: float = DEFAULT_EPSILON) -> OrderedPartition:
    """Sort ascending; adjacent values within ``epsilon`` share a group."""
    if epsilon < 0:
        raise RangeError("epsilon must be non-negative")
    ordered = sorted(values.items(), key=lambda kv: kv[1])
    groups: list[list] = []
    prev = None
    for key, v in ordered:
        if groups and v - prev <= epsilon:
            groups[-1].append(key)
        else:
            groups.append([key])
        prev = v
    return OrderedPartition(tuple(frozenset(g) for g in groups), epsilon)


def average_ranks(xs: Sequence[float]) -> list[float]:
    """1-based ranks; tied values share the mean of their positions."""
    order = sorted(range(len(xs)), key=lambda i: xs[i])
    ranks = [0.0] * len(xs)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and xs[order[j + 1]] == xs[order[i]]:
            j += 1
        r = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = r
        i = j + 1
    return ranks


def pearson(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    """Pearson correlation, or ``None`` when either side has zero variance."""
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    if len(xs) < 2:
        raise ValueError("need at least two observations")
    mx = math.fsum(xs) / len(xs)
    my = math.fsum(ys) / len(ys)
    sxy = math.fsum((x - mx) * (y - my) for x, y in zip(xs, ys))
    sxx = math.fsum((x - mx) ** 2 for x in xs)
    syy = math.fsum((y - my) ** 2 for y in ys)
    if sxx == 0 or syy == 0:
        return None
    return max(-1.0, min(1.0, sxy / math.sqrt(sxx * syy)))


def spearman_rho(xs: Sequence[float], ys: Sequence[float]) -> float | None:
    if len(xs) != len(ys):
        raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
    return pearson(average_ranks(xs), average_ranks(ys))


def r_squared(metric: Sequence[float], error_rates: Sequence[float]) -> float | None:
    """Squared Pearson correlation; equals R^2 of a least-squares line."""
    r = pearson(metric, error_rates)
    return None if r is None else r * r


@dataclass(frozen=True)
class OrderAgreement:
    concordant: int
    discordant: int
    tie_disagreements: int
    discordant_pairs: tuple = field(default=(), repr=False)

    @property
    def n_pairs(self) -> int:
        return self.concordant + self.discordant + self.tie_disagreements

    @property
    def exact_match(self) -> bool:
        return self.discordant == 0 and self.tie_disagreements == 0


def compare_orders(predicted: OrderedPartition, observed: OrderedPartition) -> OrderAgreement:
    """Classify every pair of items by how the two orders treat it.

    Pairs tied in both orders count as concordant.
    """
    if predicted.items != observed.items:
        raise ValueError("partitions cover different items")
    rp, ro = predicted.rank_of(), observed.rank_of()
    conc = disc = ties = 0
    bad = []
    for a, b in itertools.combinations(sorted(predicted.items, key=str), 2):
        dp = (rp[a] > rp[b]) - (rp[a] < rp[b])
        do = (ro[a] > ro[b]) - (ro[a] < ro[b])
        if dp == do:
            conc += 1
        elif dp == 0 or do == 0:
            ties += 1
        else:
            disc += 1
            bad.append((a, b))
    return OrderAgreement(conc, disc, ties, tuple(bad))


@dataclass
class HumanDataset:
    observations: list[tuple[CategoryStructure, float]]
    label: str = ""
    # keys as written in the file, parallel to observations
    keys: list[str] = field(default_factory=list)

    def __post_init__(self):
        seen = set()
        for s, rate in self.observations:
            if not 0.0 <= rate <= 1.0:
                raise DataError(f"error rate {rate} outside [0, 1]")
            if s in seen:
                raise DataError(f"duplicate structure {s}")
            seen.add(s)
        if not self.keys:
            self.keys = [str(s) for s, _ in self.observations]

    @property
    def structures(self) -> list[CategoryStructure]:
        return [s for s, _ in self.observations]

    @property
    def error_rates(self) -> list[float]:
        return [r for _, r in self.observations]


def resolve_structure(text: str) -> CategoryStructure:
    """A bitstring set (``000|001|...``) or a catalog id (``3[4]-2``, ``3[4]-II``)."""
    from .catalog import resolve_id

    text = text.strip()
    if "[" in text or text.upper() in {"I", "II", "III", "IV", "V", "VI"}:
        return resolve_id(text)
    return parse_structure(text)


def read_dataset(path, label: str | None = None) -> HumanDataset:
    """Load a ``structure,error_rate`` CSV."""
    path = Path(path)
    try:
        fh = path.open(newline="", encoding="utf-8")
    except OSError as exc:
        raise DataError(f"cannot read {path}: {exc}") from exc
    obs, keys = [], []
    seen: dict[CategoryStructure, int] = {}
    with fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["structure", "error_rate"]:
            raise DataError("header must be 'structure,error_rate'", row=1)
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != 2:
                raise DataError(f"expected 2 fields, got {len(row)}", row=lineno)
            try:
                s = resolve_structure(row[0])
            except (ParseError, RangeError) as exc:
                raise DataError(f"bad structure {row[0]!r}: {exc}", row=lineno) from exc
            try:
                rate = float(row[1])
            except ValueError:
                raise DataError(f"bad error rate {row[1]!r}", row=lineno) from None
            if not 0.0 <= rate <= 1.0:
                raise DataError(f"error rate {rate} outside [0, 1]", row=lineno)
            if s in seen:
                raise DataError(f"duplicate structure {s} (first at row {seen[s]})", row=lineno)
            seen[s] = lineno
            obs.append((s, rate))
            keys.append(row[0].strip())
    if len(obs) < 2:
        raise DataError("need at least two observations")
    return HumanDataset(obs, label if label is not None else path.name, keys)
