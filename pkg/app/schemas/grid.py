"""
Grid Embedding Schema

Finite-grid embeddings on the n×n discretised torus. Vertices sit on lattice
points of [0,n)²; each edge is a lattice path in the cover made of unit
steps, starting at its tail vertex and ending at a translate of its head by
a multiple of n.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, Optional, Tuple

from app.schemas.torus import EdgeGeometry, TorusGraph, TorusKind, TorusPoint, sorted_ids
from app.utils.errors import StructuralError

GridPoint = Tuple[int, int]

DIRECTIONS: Tuple[GridPoint, ...] = ((1, 0), (0, 1), (-1, 0), (0, -1))


@dataclass(frozen=True)
class GridPath:
    u: str
    v: str
    points: Tuple[GridPoint, ...]


@dataclass(frozen=True)
class GridEmbedding:
    n: int
    torus: TorusKind
    positions: Dict[str, GridPoint] = field(default_factory=dict)
    paths: Dict[str, GridPath] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise StructuralError(f"grid size must be at least 2, got {self.n}")
        for vid, (x, y) in self.positions.items():
            if not (0 <= x < self.n and 0 <= y < self.n):
                raise StructuralError(f"vertex {vid} at ({x},{y}) outside the {self.n}x{self.n} domain")
        for eid, path in self.paths.items():
            if path.u not in self.positions or path.v not in self.positions:
                raise StructuralError(f"path {eid} references unknown vertex")
            if len(path.points) < 2 or path.points[0] != self.positions[path.u]:
                raise StructuralError(f"path {eid} must start at vertex {path.u}")

    def vertex_ids(self):
        return sorted_ids(self.positions)

    def edge_ids(self):
        return sorted_ids(self.paths)

    def lift(self, eid: str) -> GridPoint:
        """Integer translate t with last point = pos(v) + n·t."""
        path = self.paths[eid]
        lx, ly = path.points[-1]
        vx, vy = self.positions[path.v]
        if (lx - vx) % self.n or (ly - vy) % self.n:
            raise StructuralError(f"path {eid} does not end at a translate of {path.v}")
        return ((lx - vx) // self.n, (ly - vy) // self.n)

    def key(self) -> Tuple:
        """Hashable identity used to dedupe search states."""
        return (
            tuple(sorted(self.positions.items())),
            tuple(sorted((eid, p.points) for eid, p in self.paths.items())),
        )

    def to_torus_graph(self) -> TorusGraph:
        n = self.n
        return TorusGraph(
            torus=self.torus,
            vertices={vid: TorusPoint(Fraction(x, n), Fraction(y, n)) for vid, (x, y) in self.positions.items()},
            edges={
                eid: EdgeGeometry(
                    u=path.u,
                    v=path.v,
                    polyline=tuple((Fraction(x, n), Fraction(y, n)) for x, y in path.points),
                )
                for eid, path in self.paths.items()
            },
        )


class MoveKind(str, Enum):
    CELL_SLIDE = "CellSlide"
    VERTEX_SLIDE = "VertexSlide"


@dataclass(frozen=True)
class Move:
    """
    CellSlide swaps a run of `length` steps of `edge`, starting at point
    index `start`, for the other way round the unit cell whose lower-left
    corner (cover coordinates) is `cell`. VertexSlide moves `vertex` one
    step in `direction`, stretching or shortening its incident paths.
    """

    kind: MoveKind
    edge: Optional[str] = None
    start: int = 0
    length: int = 0
    cell: Optional[GridPoint] = None
    vertex: Optional[str] = None
    direction: Optional[GridPoint] = None


class OracleOutcome(str, Enum):
    REDUCED = "Reduced"
    EXHAUSTED = "Exhausted"


@dataclass(frozen=True)
class ReductionResult:
    outcome: OracleOutcome
    states_explored: int
    rule: Optional[str] = None  # which terminal condition fired
    embedding: Optional[GridEmbedding] = None  # the reduced state
