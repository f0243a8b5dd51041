"""
Homology Schema

First-homology classes of closed curves on the torus and the combinatorial
objects (cycles, spanning trees, bouquets) they are computed from.
"""

from dataclasses import dataclass
from typing import FrozenSet, Tuple


@dataclass(frozen=True, order=True)
class HomologyClass:
    p: int
    q: int

    def __neg__(self) -> "HomologyClass":
        return HomologyClass(-self.p, -self.q)

    def __add__(self, other: "HomologyClass") -> "HomologyClass":
        return HomologyClass(self.p + other.p, self.q + other.q)

    @property
    def is_essential(self) -> bool:
        return (self.p, self.q) != (0, 0)

    def as_tuple(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def __str__(self) -> str:
        return f"({self.p},{self.q})"


@dataclass(frozen=True)
class Cycle:
    """
    Closed walk given as (edge id, direction) steps starting at base.
    Direction +1 traverses an edge from its u end to its v end.
    """

    edges: Tuple[Tuple[str, int], ...]
    base: str

    def edge_ids(self) -> Tuple[str, ...]:
        return tuple(eid for eid, _ in self.edges)


@dataclass(frozen=True)
class SpanningTree:
    edges: FrozenSet[str]
    roots: Tuple[str, ...]


@dataclass(frozen=True)
class Bouquet:
    """One vertex with loops, obtained by contracting a spanning tree."""

    base: str
    loop_classes: Tuple[HomologyClass, ...]
