"""
Fixed catalog of painted diagrams for scans.

Every non-empty painted set of A_1–A_4, B_2–B_4, C_3–C_4, D_4 and G_2, plus a
few F_4 selections. The list is deterministic (type order, then painted sets
by size and lexicographically).
"""

from itertools import combinations
from typing import List, Optional, Tuple

from mspace_go.models.algebra import PaintedDiagram, RootSystemType

CATALOG_TYPES: Tuple[Tuple[str, int], ...] = (
    ("A", 1), ("A", 2), ("A", 3), ("A", 4),
    ("B", 2), ("B", 3), ("B", 4),
    ("C", 3), ("C", 4),
    ("D", 4),
    ("G", 2),
)

F4_SELECTIONS: Tuple[Tuple[int, ...], ...] = ((1,), (4,), (1, 4), (1, 2, 3, 4))


def painted_sets(rank: int) -> List[Tuple[int, ...]]:
    sets: List[Tuple[int, ...]] = []
    for size in range(1, rank + 1):
        sets.extend(combinations(range(1, rank + 1), size))
    return sets


def catalog_entries(max_rank: Optional[int] = None, include_f4: bool = True) -> List[PaintedDiagram]:
    """All catalog diagrams, optionally restricted to rank ≤ max_rank."""
    entries: List[PaintedDiagram] = []
    for family, rank in CATALOG_TYPES:
        if max_rank is not None and rank > max_rank:
            continue
        t = RootSystemType.of(family, rank)
        entries.extend(PaintedDiagram.of(t, p) for p in painted_sets(rank))
    if include_f4 and (max_rank is None or max_rank >= 4):
        f4 = RootSystemType.of("F", 4)
        entries.extend(PaintedDiagram.of(f4, p) for p in F4_SELECTIONS)
    return entries


def catalog_types(include_f4: bool = True) -> List[RootSystemType]:
    types = [RootSystemType.of(f, r) for f, r in CATALOG_TYPES]
    if include_f4:
        types.append(RootSystemType.of("F", 4))
    return types
