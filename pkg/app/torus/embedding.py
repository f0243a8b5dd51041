"""
Embedding validation and per-edge homology.

An edge set is an embedding when, after projecting to the torus, edges meet
only at shared endpoints and no edge passes through a vertex other than its
own ends. The check compares every pair of polylines against every integer
translate whose bounding box can reach it.
"""

import logging
from typing import List, Set, Tuple

import networkx as nx

from app.schemas.torus import Point, TorusGraph, Vector, natural_key
from app.schemas.validation import ValidationReport, Violation
from app.torus.geometry import (
    bbox,
    on_segment,
    overlapping_translates,
    segment_intersection,
    translate,
    translates_into,
)
from app.utils.errors import StructuralError

logger = logging.getLogger(__name__)


def check_structure(g: TorusGraph) -> None:
    """Raise StructuralError when an edge polyline is malformed."""
    for eid in g.edge_ids():
        edge = g.edges[eid]
        poly = edge.polyline
        if len(poly) < 2:
            raise StructuralError(f"edge {eid} needs at least two points")
        if poly[0] != g.coords(edge.u):
            raise StructuralError(f"edge {eid} does not start at vertex {edge.u}")
        for a, b in zip(poly, poly[1:]):
            if a == b:
                raise StructuralError(f"edge {eid} repeats point {_fmt(a)}")
        edge_class(g, eid)


def edge_class(g: TorusGraph, eid: str) -> Vector:
    """Integer translate t with polyline end = coords(v) + t."""
    edge = g.edge(eid)
    last = edge.polyline[-1]
    vx, vy = g.coords(edge.v)
    dx, dy = last[0] - vx, last[1] - vy
    if dx.denominator != 1 or dy.denominator != 1:
        raise StructuralError(f"edge {eid} does not end at a translate of vertex {edge.v}")
    return (int(dx), int(dy))


def _fmt(point: Point) -> Tuple[str, str]:
    return (str(point[0]), str(point[1]))


def _at_end(poly: Tuple[Point, ...], segment: int, point: Point) -> bool:
    return (segment == 0 and point == poly[0]) or (segment == len(poly) - 2 and point == poly[-1])


def _edge_pair_violations(
    a_id: str, a_poly: Tuple[Point, ...], b_id: str, b_poly: Tuple[Point, ...], t: Vector
) -> List[Violation]:
    same = a_id == b_id and t == (0, 0)
    moved = translate(b_poly, t)
    found = []
    for i, (a0, a1) in enumerate(zip(a_poly, a_poly[1:])):
        for j, (b0, b1) in enumerate(zip(moved, moved[1:])):
            if same and j <= i:
                continue
            hit = segment_intersection(a0, a1, b0, b1)
            if hit is None:
                continue
            start, end = hit
            where = f"segment {i} of {a_id}, segment {j} of {b_id}"
            if start != end:
                found.append(
                    Violation(kind="overlap", ids=(a_id, b_id), point=_fmt(start), translate=t, detail=where)
                )
                continue
            if same and j == i + 1 and start == a1:
                continue
            if _at_end(a_poly, i, start) and _at_end(moved, j, start):
                continue
            found.append(
                Violation(kind="crossing", ids=(a_id, b_id), point=_fmt(start), translate=t, detail=where)
            )
    return found


def validate_embedding(g: TorusGraph) -> ValidationReport:
    """
    Check that the edges of g are pairwise disjoint on the torus except at
    shared endpoints. Raises StructuralError for malformed input; returns a
    report listing every violation in a deterministic order otherwise.
    """
    check_structure(g)
    violations: Set[Tuple] = set()
    collected: List[Violation] = []

    def add(found: List[Violation]) -> None:
        for violation in found:
            key = (violation.kind, violation.ids, violation.point, violation.translate)
            if key not in violations:
                violations.add(key)
                collected.append(violation)

    vertex_ids = g.vertex_ids()
    for i, a in enumerate(vertex_ids):
        for b in vertex_ids[i + 1:]:
            if g.coords(a) == g.coords(b):
                add([Violation(kind="vertex_collision", ids=(a, b), point=_fmt(g.coords(a)))])

    edge_ids = g.edge_ids()
    boxes = {eid: bbox(g.edges[eid].polyline) for eid in edge_ids}
    for i, a_id in enumerate(edge_ids):
        a_poly = g.edges[a_id].polyline
        for b_id in edge_ids[i:]:
            b_poly = g.edges[b_id].polyline
            for t in overlapping_translates(boxes[a_id], boxes[b_id]):
                # a ∩ (a + t) mirrors a ∩ (a - t); keep one of the pair
                if a_id == b_id and t < (0, 0):
                    continue
                add(_edge_pair_violations(a_id, a_poly, b_id, b_poly, t))

        edge = g.edges[a_id]
        for vid in vertex_ids:
            for t in translates_into(boxes[a_id], g.coords(vid)):
                point = (g.coords(vid)[0] + t[0], g.coords(vid)[1] + t[1])
                for k, (p0, p1) in enumerate(zip(a_poly, a_poly[1:])):
                    if not on_segment(p0, p1, point):
                        continue
                    if k == 0 and point == a_poly[0] and vid == edge.u:
                        continue
                    if k == len(a_poly) - 2 and point == a_poly[-1] and vid == edge.v:
                        continue
                    add(
                        [
                            Violation(
                                kind="vertex_on_edge",
                                ids=(a_id, vid),
                                point=_fmt(point),
                                translate=t,
                                detail=f"segment {k} of {a_id}",
                            )
                        ]
                    )

    collected.sort(key=lambda v: v.sort_key())
    if collected:
        logger.debug(f"Embedding check found {len(collected)} violation(s)")
    return ValidationReport(ok=not collected, violations=collected)


def components(g: TorusGraph) -> List[TorusGraph]:
    """Connected components, ordered by their lowest vertex id."""
    graph = nx.MultiGraph()
    graph.add_nodes_from(g.vertex_ids())
    graph.add_edges_from((e.u, e.v) for e in g.edges.values())
    parts = [sorted(part, key=natural_key) for part in nx.connected_components(graph)]
    parts.sort(key=lambda part: natural_key(part[0]))
    return [g.subgraph(part) for part in parts]

