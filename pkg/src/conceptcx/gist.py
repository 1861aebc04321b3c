"""GIST structural manifold and its magnitude.

Binding (ignoring) dimension ``i`` projects each member of A onto the
other dimensions. A member is invariant for ``i`` when its projection
coincides with another member's projection. The manifold lists the
invariant proportion per dimension; ``phi_hat`` is its Euclidean norm.
Larger ``phi_hat`` means an easier category.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

from .structures import CategoryStructure


@dataclass(frozen=True)
class StructuralManifold:
    proportions: tuple[float, ...]

    @property
    def phi_hat(self) -> float:
        return math.sqrt(math.fsum(p * p for p in self.proportions))

    def __str__(self) -> str:
        return "(" + ",".join(f"{p:g}" for p in self.proportions) + ")"


def _drop_dimension(x: int, dims: int, i: int) -> int:
    bit = dims - 1 - i
    high = x >> (bit + 1)
    low = x & ((1 << bit) - 1)
    return (high << bit) | low


def invariant_counts(s: CategoryStructure) -> list[int]:
    counts = []
    for i in range(s.dims):
        projections = Counter(_drop_dimension(x, s.dims, i) for x in s.members)
        counts.append(sum(c for c in projections.values() if c > 1))
    return counts


def flip_invariant_counts(s: CategoryStructure) -> list[int]:
    """Per-dimension count of members whose single-bit flip stays in A.

    For binary dimensions this equals :func:`invariant_counts`.
    """
    inside = s.member_set
    return [
        sum((x ^ (1 << (s.dims - 1 - i))) in inside for x in s.members)
        for i in range(s.dims)
    ]


def structural_manifold(s: CategoryStructure) -> StructuralManifold:
    return StructuralManifold(tuple(c / s.size for c in invariant_counts(s)))
