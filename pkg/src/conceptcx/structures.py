"""Boolean category structures and the D[P] catalog.

A stimulus over ``dims`` binary dimensions is an integer in ``[0, 2**dims)``
read big-endian: dimension 0 is the most significant bit, so the bitstring
``"011"`` is stimulus 3. A structure is the set of stimuli assigned to
category A; everything else is category B.

Two structures are equivalent when one maps onto the other by permuting
dimensions and flipping values on any subset of dimensions (the
hyperoctahedral group). When both categories have the same size, swapping
A and B is also allowed.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import ParseError, RangeError

MAX_DIMS = 8

# group element tables are cached up to this many dims (5!*2**5 = 3840 maps)
_CACHE_DIMS = 5


@dataclass(frozen=True, order=True)
class CategoryStructure:
    """Category A as a sorted tuple of stimulus integers."""

    dims: int
    members: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.dims <= MAX_DIMS:
            raise RangeError(f"dims must be in 1..{MAX_DIMS}, got {self.dims}")
        size = 1 << self.dims
        members = tuple(sorted(self.members))
        if len(set(members)) != len(members):
            raise ParseError("duplicate stimulus")
        if members and not 0 <= members[0] <= members[-1] < size:
            raise RangeError(f"stimulus outside 0..{size - 1}")
        if not 0 < len(members) < size:
            raise RangeError("both categories must be nonempty")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_bitstrings(cls, bits, dims=None):
        bits = list(bits)
        if dims is None:
            dims = len(bits[0]) if bits else 0
        return cls(dims, tuple(int(b, 2) for b in bits))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def n_stimuli(self) -> int:
        return 1 << self.dims

    @property
    def mask(self) -> int:
        """Membership bitmask: bit ``x`` is set iff stimulus ``x`` is in A."""
        m = 0
        for x in self.members:
            m |= 1 << x
        return m

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def bitstrings(self) -> list[str]:
        return [format(x, f"0{self.dims}b") for x in self.members]

    def __contains__(self, stimulus) -> bool:
        return stimulus in self.member_set

    def __str__(self) -> str:
        return "{" + ",".join(self.bitstrings()) + "}"


@dataclass(frozen=True)
class StructureClassId:
    """Catalog address ``D[P]-k``: the k-th class (1-based) of D[P]."""

    dims: int
    p: int
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise RangeError("catalog index starts at 1")
        if not 1 <= self.p <= (1 << self.dims) // 2:
            raise RangeError(f"p must be in 1..{(1 << self.dims) // 2}")

    @property
    def block(self) -> str:
        return f"{self.dims}[{self.p}]"

    def __str__(self) -> str:
        return f"{self.block}-{self.index}"

    def resolve(self) -> CategoryStructure:
        classes = enumerate_classes(self.dims, self.p)
        if self.index > len(classes):
            raise RangeError(f"{self.block} has only {len(classes)} classes")
        return classes[self.index - 1]


_CLASS_ID = re.compile(r"^\s*(\d+)\[(\d+)\]-(\d+)\s*$")


def parse_class_id(text: str) -> StructureClassId:
    m = _CLASS_ID.match(text)
    if not m:
        raise ParseError(f"not a catalog id: {text!r}")
    return StructureClassId(*(int(g) for g in m.groups()))


def parse_structure(text: str, dims: int | None = None) -> CategoryStructure:
    """Parse ``"000,001,110,111"`` (or ``|``-separated, braces optional).

    ``dims`` defaults to the length of the first token.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    tokens = [t.strip() for t in re.split(r"[,|]", body)]
    if not tokens or tokens == [""]:
        raise ParseError("empty structure")
    if dims is None:
        dims = len(tokens[0])
    if not 1 <= dims <= MAX_DIMS:
        raise RangeError(f"dims must be in 1..{MAX_DIMS}, got {dims}")
    seen = set()
    for pos, tok in enumerate(tokens, 1):
        if len(tok) != dims or set(tok) - {"0", "1"}:
            raise ParseError(f"expected {dims} binary digits, got {tok!r}", pos)
        if tok in seen:
            raise ParseError(f"duplicate stimulus {tok!r}", pos)
        seen.add(tok)
    if len(tokens) == 1 << dims:
        raise RangeError("category A covers the whole stimulus space")
    return CategoryStructure(dims, tuple(int(t, 2) for t in tokens))


def complement(s: CategoryStructure) -> CategoryStructure:
    inside = s.member_set
    return CategoryStructure(s.dims, tuple(x for x in range(s.n_stimuli) if x not in inside))


def _apply(x: int, dims: int, perm, flip: int) -> int:
    # dimension i moves to position perm[i]
    y = 0
    for i in range(dims):
        if x >> (dims - 1 - i) & 1:
            y |= 1 << (dims - 1 - perm[i])
    return y ^ flip


def _iter_group(dims: int) -> Iterator[tuple[int, ...]]:
    space = range(1 << dims)
    for perm in itertools.permutations(range(dims)):
        for flip in space:
            yield tuple(_apply(x, dims, perm, flip) for x in space)


@lru_cache(maxsize=None)
def _cached_group(dims: int) -> tuple[tuple[int, ...], ...]:
    return tuple(_iter_group(dims))


def group_elements(dims: int):
    """Stimulus permutations induced by the hyperoctahedral group on ``dims``."""
    if dims <= _CACHE_DIMS:
        return _cached_group(dims)
    return _iter_group(dims)


def group_order(dims: int) -> int:
    return math.factorial(dims) * (1 << dims)


def _orbit_keys(dims: int, members) -> set[tuple[int, ...]]:
    full = frozenset(range(1 << dims))
    balanced = 2 * len(members) == 1 << dims
    keys = set()
    for g in group_elements(dims):
        image = [g[x] for x in members]
        keys.add(tuple(sorted(image)))
        if balanced:
            keys.add(tuple(sorted(full.difference(image))))
    return keys


def symmetry_orbit(s: CategoryStructure) -> frozenset[CategoryStructure]:
    return frozenset(CategoryStructure(s.dims, k) for k in _orbit_keys(s.dims, s.members))


def canonical_form(s: CategoryStructure) -> CategoryStructure:
    """Orbit member with |A| <= |B| whose sorted member tuple is smallest.

    Larger-than-half structures are first replaced by their complement
    (up parity), which has the same metric values.
    """
    if 2 * s.size > s.n_stimuli:
        s = complement(s)
    return CategoryStructure(s.dims, min(_orbit_keys(s.dims, s.members)))


@lru_cache(maxsize=None)
def _classes(dims: int, p: int) -> tuple[CategoryStructure, ...]:
    seen: set[tuple[int, ...]] = set()
    reps = []
    # combinations() yields sorted tuples in lexicographic order, so the
    # first unseen tuple of an orbit is its canonical representative
    for combo in itertools.combinations(range(1 << dims), p):
        if combo in seen:
            continue
        reps.append(CategoryStructure(dims, combo))
        seen |= _orbit_keys(dims, combo)
    return tuple(reps)


def enumerate_classes(dims: int, p: int) -> list[CategoryStructure]:
    """One canonical representative per equivalence class of D[P], ascending."""
    if not 1 <= dims <= MAX_DIMS:
        raise RangeError(f"dims must be in 1..{MAX_DIMS}, got {dims}")
    if not 1 <= p <= (1 << dims) // 2:
        raise RangeError(f"p must be in 1..{(1 << dims) // 2} for dims={dims}, got {p}")
    return list(_classes(dims, p))


def class_id_of(s: CategoryStructure) -> StructureClassId:
    c = canonical_form(s)
    return StructureClassId(c.dims, c.size, enumerate_classes(c.dims, c.size).index(c) + 1)
