"""
Validity of grid embeddings on the n×n torus.

Every lattice point and every unit segment is identified modulo n. A valid
embedding uses each segment at most once, never revisits a lattice point
inside a path, and only touches vertex points at path ends.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from app.schemas.grid import GridEmbedding, GridPoint

SegmentKey = Tuple[str, int, int]  # ("H"|"V", lower-left x mod n, y mod n)


def segment_key(a: GridPoint, b: GridPoint, n: int) -> Optional[SegmentKey]:
    """Key of the unit segment ab modulo n, None when ab is not a unit step."""
    dx, dy = b[0] - a[0], b[1] - a[1]
    if abs(dx) + abs(dy) != 1:
        return None
    if dy == 0:
        return ("H", min(a[0], b[0]) % n, a[1] % n)
    return ("V", a[0] % n, min(a[1], b[1]) % n)


def reduce(point: GridPoint, n: int) -> GridPoint:
    return (point[0] % n, point[1] % n)


@dataclass
class Occupancy:
    """Which edge owns each lattice point and segment of the torus grid."""

    n: int
    vertex_points: Dict[GridPoint, str] = field(default_factory=dict)
    interior_points: Dict[GridPoint, str] = field(default_factory=dict)
    segments: Dict[SegmentKey, str] = field(default_factory=dict)


def grid_violations(e: GridEmbedding, skip_edges: Tuple[str, ...] = ()) -> Tuple[List[str], Occupancy]:
    """Every reason e is not a valid grid embedding, plus the occupancy built on the way."""
    n = e.n
    problems: List[str] = []
    occupancy = Occupancy(n=n)
    for vid in e.vertex_ids():
        point = e.positions[vid]
        if point in occupancy.vertex_points:
            problems.append(f"vertices {occupancy.vertex_points[point]} and {vid} share {point}")
        occupancy.vertex_points[point] = vid

    for eid in e.edge_ids():
        if eid in skip_edges:
            continue
        path = e.paths[eid]
        points = path.points
        last = reduce(points[-1], n)
        if last != e.positions[path.v]:
            problems.append(f"path {eid} does not end at {path.v}")
        seen: Set[GridPoint] = set()
        for a, b in zip(points, points[1:]):
            key = segment_key(a, b, n)
            if key is None:
                problems.append(f"path {eid} has a non-unit step {a}->{b}")
                continue
            if key in occupancy.segments:
                problems.append(f"segment {key} used by {occupancy.segments[key]} and {eid}")
            occupancy.segments[key] = eid
        for point in points[1:-1]:
            cell = reduce(point, n)
            if cell in occupancy.vertex_points:
                problems.append(f"path {eid} passes through vertex {occupancy.vertex_points[cell]}")
            elif cell in occupancy.interior_points or cell in seen:
                owner = occupancy.interior_points.get(cell, eid)
                problems.append(f"paths {owner} and {eid} share point {cell}")
            seen.add(cell)
            occupancy.interior_points[cell] = eid
    return problems, occupancy


def is_valid_grid_embedding(e: GridEmbedding) -> bool:
    problems, _ = grid_violations(e)
    return not problems
