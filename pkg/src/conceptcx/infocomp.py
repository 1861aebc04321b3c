"""Information complexity of a category structure.

Fixing the values of ``n`` dimensions splits the stimulus space into
``2**n`` cells. The remaining classification uncertainty of one such split
is the simple average, over its cells, of the binary entropy of the A/B
split inside the cell. ``U(n)`` collects that number for every size-``n``
subset of dimensions; an aggregator (min or mean) collapses ``U(n)`` to a
single level value ``u_G(n)``, and the complexity is the sum of the level
values over ``n = 0..dims``.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from statistics import fmean
from typing import Callable, Iterable, Sequence

from .errors import RangeError
from .structures import CategoryStructure

# Reducers for U(n); extend with register_aggregator.
_REDUCERS: dict[str, Callable[[Sequence[float]], float]] = {
    "min": min,
    "mean": fmean,
}


def register_aggregator(name: str, reducer: Callable[[Sequence[float]], float]) -> None:
    if name == "weighted":
        raise ValueError("'weighted' is reserved")
    _REDUCERS[name] = reducer


@dataclass(frozen=True)
class Aggregator:
    kind: str
    alpha: float | None = None

    def __post_init__(self):
        if self.kind == "weighted":
            if self.alpha is None or not 0.0 <= self.alpha <= 1.0:
                raise RangeError(f"alpha must lie in [0, 1], got {self.alpha}")
        elif self.alpha is not None:
            raise ValueError("alpha is only meaningful for the weighted aggregator")
        elif self.kind not in _REDUCERS:
            raise ValueError(f"unknown aggregator {self.kind!r}")

    @classmethod
    def weighted(cls, alpha: float) -> "Aggregator":
        return cls("weighted", alpha)

    def reduce(self, values: Sequence[float]) -> float:
        if self.kind == "weighted":
            raise ValueError("the weighted aggregator combines levels; use weighted_two_level")
        return _REDUCERS[self.kind](values)

    def __str__(self) -> str:
        return self.kind if self.alpha is None else f"{self.kind}({self.alpha:g})"


MIN = Aggregator("min")
MEAN = Aggregator("mean")


def _as_aggregator(g) -> Aggregator:
    return g if isinstance(g, Aggregator) else Aggregator(g)


def entropy_term(p: float) -> float:
    """``-p * log2(p)``, with the limit value 0 at ``p = 0``."""
    if not 0.0 <= p <= 1.0:
        raise RangeError(f"probability must lie in [0, 1], got {p}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p)


def _binary_entropy(n_a: int, n: int) -> float:
    if n_a == 0 or n_a == n:
        return 0.0
    p = n_a / n
    return entropy_term(p) + entropy_term(1.0 - p)


def cell_entropy(s: CategoryStructure, cell: Iterable[int]) -> float:
    """Entropy (bits) of the category label among the stimuli of ``cell``."""
    cell = set(cell)
    if not cell:
        raise ValueError("cell must be nonempty")
    if not all(0 <= x < s.n_stimuli for x in cell):
        raise RangeError("cell contains stimuli outside the stimulus space")
    n_a = len(cell & s.member_set)
    return _binary_entropy(n_a, len(cell))


def dimension_subsets(dims: int, n: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(dims), n))


def _check_level(s: CategoryStructure, n: int) -> None:
    if not 0 <= n <= s.dims:
        raise RangeError(f"level n must lie in 0..{s.dims}, got {n}")


def _subset_uncertainty(s: CategoryStructure, subset: tuple[int, ...]) -> float:
    d = s.dims
    key_mask = 0
    for i in subset:
        key_mask |= 1 << (d - 1 - i)
    # every cell holds 2**(d-n) stimuli; cells without A members are pure
    cell_size = 1 << (d - len(subset))
    n_cells = 1 << len(subset)
    hits = Counter(x & key_mask for x in s.members)
    # simple average over cells, as in the definition of U(n)
    return math.fsum(_binary_entropy(a, cell_size) for a in hits.values()) / n_cells


def level_uncertainties(s: CategoryStructure, n: int) -> list[float]:
    """``U(n)``: one entry per size-``n`` dimension subset, lexicographic order."""
    _check_level(s, n)
    return [_subset_uncertainty(s, sub) for sub in dimension_subsets(s.dims, n)]


def level_metric(s: CategoryStructure, n: int, g="min") -> float:
    return _as_aggregator(g).reduce(level_uncertainties(s, n))


@dataclass(frozen=True)
class LevelProfile:
    dims: int
    aggregator: str
    u_vectors: tuple[tuple[float, ...], ...]
    u_levels: tuple[float, ...]
    u_hat: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "u_hat", math.fsum(self.u_levels))

    def as_record(self) -> dict:
        rec = {"dims": self.dims, "aggregator": self.aggregator}
        rec.update({f"u{n}": v for n, v in enumerate(self.u_levels)})
        rec["u_hat"] = self.u_hat
        return rec


def aggregate_metric(s: CategoryStructure, g="min") -> LevelProfile:
    g = _as_aggregator(g)
    vectors = tuple(tuple(level_uncertainties(s, n)) for n in range(s.dims + 1))
    return LevelProfile(s.dims, str(g), vectors, tuple(g.reduce(v) for v in vectors))


def u_hat(s: CategoryStructure, g="min") -> float:
    return aggregate_metric(s, g).u_hat


def weighted_two_level(s: CategoryStructure, alpha: float) -> float:
    """``alpha * u_min(1) + (1 - alpha) * u_min(2)``."""
    Aggregator.weighted(alpha)  # range check
    if s.dims < 2:
        raise RangeError("two-level weighting needs at least 2 dimensions")
    return alpha * level_metric(s, 1, MIN) + (1.0 - alpha) * level_metric(s, 2, MIN)
