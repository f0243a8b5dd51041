"""
Torus Graph Schema

A graph embedded in the torus R²/Z². Vertices sit in the fundamental domain
[0,1)²; every edge is a polyline in the universal cover that starts at its
tail vertex and ends at an integer translate of its head vertex. All
coordinates are exact rationals.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from app.utils.errors import StructuralError

Point = Tuple[Fraction, Fraction]
Vector = Tuple[int, int]

_DIGITS = re.compile(r"(\d+)")


def natural_key(identifier: str) -> Tuple:
    """Sort key so that e2 < e10."""
    return tuple(
        (0, int(part), "") if part.isdigit() else (1, 0, part)
        for part in _DIGITS.split(identifier)
        if part
    )


def sorted_ids(ids: Iterable[str]) -> List[str]:
    return sorted(ids, key=natural_key)


class TorusKind(str, Enum):
    """How the torus sits in S³"""

    STANDARD = "standard"  # unknotted, bounds solid tori on both sides
    NONSTANDARD_KNOTTED = "knotted"  # boundary of a knotted solid torus


@dataclass(frozen=True)
class TorusPoint:
    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        for value in (self.x, self.y):
            if not 0 <= value < 1:
                raise StructuralError(f"coordinate {value} outside [0,1)")

    def as_tuple(self) -> Point:
        return (self.x, self.y)


@dataclass(frozen=True)
class EdgeGeometry:
    """Polyline in the cover from coords(u) to coords(v) + t for some t ∈ Z²."""

    u: str
    v: str
    polyline: Tuple[Point, ...]

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class TorusGraph:
    torus: TorusKind
    vertices: Dict[str, TorusPoint] = field(default_factory=dict)
    edges: Dict[str, EdgeGeometry] = field(default_factory=dict)

    def __post_init__(self) -> None:
        overlap = set(self.vertices) & set(self.edges)
        if overlap:
            raise StructuralError(f"ids used for both a vertex and an edge: {sorted_ids(overlap)}")
        for eid, edge in self.edges.items():
            for end in (edge.u, edge.v):
                if end not in self.vertices:
                    raise StructuralError(f"edge {eid} references unknown vertex {end}")

    def vertex_ids(self) -> List[str]:
        return sorted_ids(self.vertices)

    def edge_ids(self) -> List[str]:
        return sorted_ids(self.edges)

    def coords(self, vertex: str) -> Point:
        try:
            return self.vertices[vertex].as_tuple()
        except KeyError:
            raise StructuralError(f"unknown vertex {vertex}") from None

    def edge(self, eid: str) -> EdgeGeometry:
        try:
            return self.edges[eid]
        except KeyError:
            raise StructuralError(f"unknown edge {eid}") from None

    def incident(self, vertex: str) -> List[Tuple[str, str, int]]:
        """
        Non-loop edges at a vertex as (edge id, other end, direction), in
        edge-id order. Direction +1 means the edge leaves the vertex.
        """
        found = []
        for eid in self.edge_ids():
            edge = self.edges[eid]
            if edge.is_loop:
                continue
            if edge.u == vertex:
                found.append((eid, edge.v, 1))
            elif edge.v == vertex:
                found.append((eid, edge.u, -1))
        return found

    def loops_at(self, vertex: str) -> List[str]:
        return [eid for eid in self.edge_ids() if self.edges[eid].is_loop and self.edges[eid].u == vertex]

    def reversed_edge(self, eid: str) -> EdgeGeometry:
        """Same curve traversed from v to u, re-anchored at coords(v)."""
        edge = self.edge(eid)
        last = edge.polyline[-1]
        vx, vy = self.coords(edge.v)
        dx, dy = last[0] - vx, last[1] - vy
        flipped = tuple((x - dx, y - dy) for x, y in reversed(edge.polyline))
        return EdgeGeometry(u=edge.v, v=edge.u, polyline=flipped)

    def subgraph(self, vertex_ids: Iterable[str], edge_ids: Optional[Iterable[str]] = None) -> "TorusGraph":
        keep = set(vertex_ids)
        if edge_ids is None:
            chosen = {eid: e for eid, e in self.edges.items() if e.u in keep and e.v in keep}
        else:
            chosen = {eid: self.edge(eid) for eid in edge_ids}
        return TorusGraph(
            torus=self.torus,
            vertices={vid: self.vertices[vid] for vid in keep},
            edges=chosen,
        )

    def abstract(self) -> "AbstractGraph":
        return AbstractGraph(
            vertices=tuple(self.vertex_ids()),
            edges=tuple((eid, self.edges[eid].u, self.edges[eid].v) for eid in self.edge_ids()),
        )


@dataclass(frozen=True)
class AbstractGraph:
    """Finite multigraph (loops and parallel edges allowed) with string ids."""

    vertices: Tuple[str, ...]
    edges: Tuple[Tuple[str, str, str], ...]  # (edge id, u, v)

    def __post_init__(self) -> None:
        known = set(self.vertices)
        for eid, u, v in self.edges:
            if u not in known or v not in known:
                raise StructuralError(f"edge {eid} references unknown vertex")

    def degree(self, vertex: str) -> int:
        return sum((u == vertex) + (v == vertex) for _, u, v in self.edges)

    def max_degree(self) -> int:
        return max((self.degree(v) for v in self.vertices), default=0)
