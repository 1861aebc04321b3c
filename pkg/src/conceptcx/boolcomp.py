"""Boolean complexity as the literal count of a minimal DNF for category A.

Prime implicants come from Quine-McCluskey merging; the cheapest cover is
found by exact branch and bound (essential primes first, then branching
on the least-covered minterm). Costs are literal counts; ties are broken
by fewer implicants, then by implicant order (see ``Implicant.sort_key``).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .structures import CategoryStructure

LETTERS = "abcdefgh"

# positive literal before negated literal before absent dimension
_CHAR_RANK = {"1": 0, "0": 1, "-": 2}


@dataclass(frozen=True)
class Implicant:
    """A cube: stimuli ``x`` with ``x & care_mask == values``.

    Masks use the stimulus bit layout (dimension 0 is the high bit).
    """

    dims: int
    care_mask: int
    values: int

    def __post_init__(self):
        if self.values & ~self.care_mask:
            raise ValueError("values must lie inside care_mask")

    @property
    def literal_count(self) -> int:
        return bin(self.care_mask).count("1")

    def covers(self, x: int) -> bool:
        return x & self.care_mask == self.values

    def stimuli(self) -> list[int]:
        return [x for x in range(1 << self.dims) if self.covers(x)]

    @property
    def pattern(self) -> str:
        out = []
        for i in range(self.dims):
            bit = 1 << (self.dims - 1 - i)
            out.append("-" if not self.care_mask & bit else "1" if self.values & bit else "0")
        return "".join(out)

    def sort_key(self):
        return tuple(_CHAR_RANK[c] for c in self.pattern)

    def term(self) -> str:
        parts = []
        for letter, c in zip(LETTERS, self.pattern):
            if c == "1":
                parts.append(letter)
            elif c == "0":
                parts.append(letter + "'")
        return "".join(parts)

    def __str__(self) -> str:
        return self.term()


@dataclass(frozen=True)
class BoolComplexityResult:
    literal_count: int
    minimal_cover: tuple[Implicant, ...]
    formula_text: str = field(init=False)
    # two-level minimisation; multi-level factored forms can be shorter
    form: str = "minimal-dnf"

    def __post_init__(self):
        object.__setattr__(self, "formula_text", render_formula(self.minimal_cover))


def render_formula(cover) -> str:
    return " + ".join(imp.term() for imp in cover)


def prime_implicants(s: CategoryStructure) -> set[Implicant]:
    d = s.dims
    full = (1 << d) - 1
    current = {(full, x) for x in s.members}
    primes: set[tuple[int, int]] = set()
    while current:
        merged = set()
        nxt = set()
        by_care: dict[int, set[int]] = {}
        for care, vals in current:
            by_care.setdefault(care, set()).add(vals)
        for care, vals_set in by_care.items():
            for vals in vals_set:
                for i in range(d):
                    bit = 1 << i
                    if not care & bit or vals & bit:
                        continue
                    partner = vals | bit
                    if partner in vals_set:
                        nxt.add((care & ~bit, vals))
                        merged.add((care, vals))
                        merged.add((care, partner))
        primes |= current - merged
        current = nxt
    return {Implicant(d, care, vals) for care, vals in primes}


def _cover_key(cover):
    return (
        sum(p.literal_count for p in cover),
        len(cover),
        tuple(sorted(p.sort_key() for p in cover)),
    )


def minimal_cover(s: CategoryStructure) -> tuple[Implicant, ...]:
    primes = sorted(prime_implicants(s), key=Implicant.sort_key)
    covers = {p: frozenset(x for x in s.members if p.covers(x)) for p in primes}
    candidates = {x: [p for p in primes if x in covers[p]] for x in s.members}

    forced = []
    uncovered = set(s.members)
    for x in s.members:
        if len(candidates[x]) == 1 and candidates[x][0] not in forced:
            forced.append(candidates[x][0])
    for p in forced:
        uncovered -= covers[p]

    best: list = [None]

    def search(uncovered: frozenset, chosen: list, cost: int):
        if not uncovered:
            cover = tuple(sorted(chosen, key=Implicant.sort_key))
            if best[0] is None or _cover_key(cover) < _cover_key(best[0]):
                best[0] = cover
            return
        lower = max(min(p.literal_count for p in candidates[x]) for x in uncovered)
        if best[0] is not None:
            b_cost, b_len = _cover_key(best[0])[:2]
            if (cost + lower, len(chosen) + 1) > (b_cost, b_len):
                return
        pivot = min(uncovered, key=lambda x: (len(candidates[x]), x))
        for p in candidates[pivot]:
            search(uncovered - covers[p], chosen + [p], cost + p.literal_count)

    search(frozenset(uncovered), list(forced), sum(p.literal_count for p in forced))
    return best[0]


def boolean_complexity(s: CategoryStructure) -> BoolComplexityResult:
    cover = minimal_cover(s)
    return BoolComplexityResult(sum(p.literal_count for p in cover), cover)
