"""Pinned row order of the published D[P] catalog listing.

The listing order comes from earlier catalogs and cannot be derived from
the structures, so ``data/catalog.tsv`` fixes it. Every row must be the
canonical representative of a class of its block; this is checked on load.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .errors import ParseError
from .structures import (
    CategoryStructure,
    StructureClassId,
    canonical_form,
    enumerate_classes,
    parse_class_id,
    parse_structure,
)

BLOCKS = ("2[1]", "2[2]", "3[1]", "3[2]", "3[3]", "3[4]", "4[1]", "4[2]", "4[3]", "4[4]")
SHJ_BLOCK = "3[4]"
SHJ_LABELS = ("I", "II", "III", "IV", "V", "VI")


@dataclass(frozen=True)
class CatalogRow:
    block: str
    row: int
    label: str
    structure: CategoryStructure
    class_id: StructureClassId

    @property
    def name(self) -> str:
        return self.label or str(self.structure)


def _block_dims(block: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\[(\d+)\]", block)
    if not m:
        raise ParseError(f"bad block name {block!r}")
    return int(m.group(1)), int(m.group(2))


@lru_cache(maxsize=None)
def catalog_rows() -> tuple[CatalogRow, ...]:
    text = resources.files("conceptcx").joinpath("data/catalog.tsv").read_text(encoding="utf-8")
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        block, row, label, a_set = line.split("\t")
        dims, p = _block_dims(block)
        s = parse_structure(a_set, dims)
        if s.size != p or canonical_form(s) != s:
            raise ValueError(f"catalog row {block}/{row} is not a canonical {block} structure")
        index = enumerate_classes(dims, p).index(s) + 1
        rows.append(CatalogRow(block, int(row), label, s, StructureClassId(dims, p, index)))
    return tuple(rows)


def block_rows(block: str) -> list[CatalogRow]:
    return [r for r in catalog_rows() if r.block == block]


def shj_types() -> dict[str, CategoryStructure]:
    """Roman-numeral SHJ label -> structure."""
    return {r.label: r.structure for r in block_rows(SHJ_BLOCK)}


def resolve_id(text: str) -> CategoryStructure:
    """Resolve ``D[P]-k`` (enumeration index), ``3[4]-II`` or a bare ``II``."""
    text = text.strip()
    label = text.split("-", 1)[1] if text.startswith(SHJ_BLOCK + "-") else text
    if label.upper() in SHJ_LABELS:
        return shj_types()[label.upper()]
    return parse_class_id(text).resolve()
