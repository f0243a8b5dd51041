"""
Isotopy-reduction oracle.

Breadth-first search over grid embeddings reachable by cell and vertex
slides, stopping as soon as a state is recognisably trivial. The oracle
never consults homology; it is an independent check on classify.

Terminal states, with the torus standing in S³:

* meridian-free: some column of cells x ∈ (c, c+1) has no horizontal
  segment, so the graph misses a meridian disk of the solid torus and
  lies in a ball (holds on any torus).
* longitude-free: some row of cells has no vertical segment; the graph
  misses a longitudinal disk of the outer solid torus (standard torus only).
* single crossing: exactly one segment of one edge e crosses such a column
  (or row) and the ends of e share a face of G − e once the column is
  capped off by two disks. Then e runs parallel to an arc in the ball and
  can be pulled off the disk (standard torus only).

Three simplifications shrink a state and test the smaller one again. Each
keeps triviality in both directions.

* pendant: an isolated vertex, or a thread ending at a degree-one vertex,
  retracts to a point.
* thin face: a disk face bounded by at most two threads, each seen from one
  side only. The threads are parallel across an empty disk (or a single
  thread bounds one), so one of them can be dropped.
* cellular (standard torus only): every face is a disk, the graph is
  abstractly planar and each single-edge deletion reduces. With disk faces
  the complement is built from two solid tori glued along disks, so its
  fundamental group is free, and a graph with free complement whose proper
  subgraphs are all planar is itself planar.

A thread is a maximal trail whose inner vertices have degree two.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Set, Tuple

from networkx.utils import UnionFind

from app.config.settings import get_settings
from app.enumerate.grid import Occupancy, grid_violations
from app.enumerate.moves import apply_move, candidate_moves
from app.planarity.planarity import is_planar
from app.schemas.grid import GridEmbedding, GridPath, GridPoint, OracleOutcome, ReductionResult
from app.schemas.torus import AbstractGraph, TorusKind
from app.utils.errors import InapplicableMove

logger = logging.getLogger(__name__)

Region = Tuple[str, int, int]
Cell = Tuple[int, int]


@dataclass(frozen=True)
class _Thread:
    edges: Tuple[str, ...]
    inner: Tuple[str, ...]
    ends: Tuple[str, ...]  # empty for a cycle of degree-two vertices


@dataclass
class _Face:
    cells: int = 0
    free_segments: int = 0
    free_points: int = 0
    two_sided: bool = False
    boundary: Set[str] = field(default_factory=set)

    @property
    def is_disk(self) -> bool:
        return self.cells - self.free_segments + self.free_points == 1


def _transpose(e: GridEmbedding) -> GridEmbedding:
    return GridEmbedding(
        n=e.n,
        torus=e.torus,
        positions={vid: (y, x) for vid, (x, y) in e.positions.items()},
        paths={
            eid: GridPath(u=p.u, v=p.v, points=tuple((y, x) for x, y in p.points))
            for eid, p in e.paths.items()
        },
    )


def _without(e: GridEmbedding, edges: Iterable[str], vertices: Iterable[str] = ()) -> GridEmbedding:
    dropped_edges, dropped_vertices = set(edges), set(vertices)
    return GridEmbedding(
        n=e.n,
        torus=e.torus,
        positions={vid: p for vid, p in e.positions.items() if vid not in dropped_vertices},
        paths={eid: p for eid, p in e.paths.items() if eid not in dropped_edges},
    )


def _column_crossings(occupancy: Occupancy) -> Dict[int, List[str]]:
    """Column c -> edges owning a horizontal segment inside it."""
    crossings: Dict[int, List[str]] = {c: [] for c in range(occupancy.n)}
    for (axis, x, _), eid in occupancy.segments.items():
        if axis == "H":
            crossings[x].append(eid)
    return crossings


def _ends_share_face(e: GridEmbedding, occupancy: Occupancy, column: int, edge: str) -> bool:
    """
    Faces of G − edge on the annulus obtained by cutting the torus along the
    middle of `column` and capping both boundary circles with disks.
    """
    path = e.paths[edge]
    if path.u == path.v:
        return True
    n = e.n
    used = {key for key, owner in occupancy.segments.items() if owner != edge}
    regions = UnionFind()

    def part(i: int, j: int, side: str) -> Region:
        i, j = i % n, j % n
        if i == column:
            return (side, column, j)
        return ("C", i, j)

    for i in range(n):
        for j in range(n):
            if ("V", (i + 1) % n, j) not in used:
                regions.union(part(i, j, "R"), part(i + 1, j, "L"))
            if ("H", i, (j + 1) % n) not in used:
                if i == column:
                    regions.union(part(i, j, "L"), part(i, j + 1, "L"))
                    regions.union(part(i, j, "R"), part(i, j + 1, "R"))
                else:
                    regions.union(part(i, j, "C"), part(i, j + 1, "C"))
    for j in range(1, n):
        regions.union(part(column, 0, "L"), part(column, j, "L"))
        regions.union(part(column, 0, "R"), part(column, j, "R"))

    def around(point: GridPoint) -> Set[Region]:
        x, y = point
        touching = set()
        for i, j in ((x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y)):
            side = "L" if i % n == x % n else "R"
            touching.add(regions[part(i, j, side)])
        return touching

    return bool(around(e.positions[path.u]) & around(e.positions[path.v]))


def _column_rule(e: GridEmbedding, occupancy: Occupancy, allow_single: bool) -> Optional[str]:
    for column, owners in _column_crossings(occupancy).items():
        if not owners:
            return f"misses circle at column {column}"
        if allow_single and len(owners) == 1 and _ends_share_face(e, occupancy, column, owners[0]):
            return f"single crossing of {owners[0]} at column {column}"
    return None


def _degrees(e: GridEmbedding) -> Dict[str, int]:
    degree = {vid: 0 for vid in e.positions}
    for path in e.paths.values():
        degree[path.u] += 1
        degree[path.v] += 1
    return degree


def _threads(e: GridEmbedding) -> List[_Thread]:
    degree = _degrees(e)
    incident: Dict[str, List[str]] = {vid: [] for vid in e.positions}
    for eid in e.edge_ids():
        path = e.paths[eid]
        incident[path.u].append(eid)
        incident[path.v].append(eid)
    used: Set[str] = set()

    def far_end(eid: str, vid: str) -> str:
        path = e.paths[eid]
        return path.v if path.u == vid else path.u

    def follow(start: str, first: str) -> Tuple[List[str], List[str], str]:
        edges, inner = [first], []
        used.add(first)
        here = far_end(first, start)
        while degree[here] == 2 and here != start:
            inner.append(here)
            step = next(eid for eid in incident[here] if eid not in used)
            edges.append(step)
            used.add(step)
            here = far_end(step, here)
        return edges, inner, here

    threads = []
    for vid in e.vertex_ids():
        if degree[vid] == 2:
            continue
        for eid in incident[vid]:
            if eid not in used:
                edges, inner, end = follow(vid, eid)
                threads.append(_Thread(edges=tuple(edges), inner=tuple(inner), ends=(vid, end)))
    for eid in e.edge_ids():
        if eid not in used:
            start = e.paths[eid].u
            edges, inner, _ = follow(start, eid)
            threads.append(_Thread(edges=tuple(edges), inner=(start, *inner), ends=()))
    return threads


def _faces(e: GridEmbedding, occupancy: Occupancy) -> List[_Face]:
    """Faces of G on the torus as unions of grid cells, in a fixed order."""
    n = e.n
    segments = occupancy.segments
    cells = UnionFind((i, j) for i in range(n) for j in range(n))
    for i in range(n):
        for j in range(n):
            if ("V", (i + 1) % n, j) not in segments:
                cells.union((i, j), ((i + 1) % n, j))
            if ("H", i, (j + 1) % n) not in segments:
                cells.union((i, j), (i, (j + 1) % n))

    faces: Dict[Cell, _Face] = {}
    for i in range(n):
        for j in range(n):
            face = faces.setdefault(cells[(i, j)], _Face())
            face.cells += 1
            right, up = ((i + 1) % n, j), (i, (j + 1) % n)
            for key, beyond in ((("V", right[0], j), right), (("H", i, up[1]), up)):
                owner = segments.get(key)
                if owner is None:
                    face.free_segments += 1
                    continue
                other = faces.setdefault(cells[beyond], _Face())
                face.boundary.add(owner)
                other.boundary.add(owner)
                if other is face:
                    face.two_sided = True

    vertex_points = set(e.positions.values())
    for x in range(n):
        for y in range(n):
            touching = (("H", x, y), ("H", (x - 1) % n, y), ("V", x, y), ("V", x, (y - 1) % n))
            if (x, y) in vertex_points or any(key in segments for key in touching):
                continue
            faces[cells[(x, y)]].free_points += 1
    return [faces[root] for root in sorted(faces)]


def _pendant(e: GridEmbedding) -> Optional[Tuple[str, GridEmbedding]]:
    if not e.paths:
        return None
    degree = _degrees(e)
    isolated = [vid for vid in e.vertex_ids() if degree[vid] == 0]
    if isolated:
        return f"pendant: dropped vertex {isolated[0]}", _without(e, (), isolated)
    for thread in _threads(e):
        leaves = [vid for vid in thread.ends if degree[vid] == 1]
        if leaves:
            return (
                f"pendant: dropped {' '.join(thread.edges)}",
                _without(e, thread.edges, (*thread.inner, *leaves)),
            )
    return None


def _thin_face(e: GridEmbedding, faces: List[_Face]) -> Optional[Tuple[str, GridEmbedding]]:
    threads = _threads(e)
    thread_of = {eid: k for k, thread in enumerate(threads) for eid in thread.edges}
    for face in faces:
        if not face.is_disk or face.two_sided or not face.boundary:
            continue
        touching = sorted({thread_of[eid] for eid in face.boundary})
        if len(touching) <= 2:
            thread = threads[touching[-1]]
            return f"thin face: dropped {' '.join(thread.edges)}", _without(e, thread.edges, thread.inner)
    return None


def _abstract(e: GridEmbedding) -> AbstractGraph:
    return AbstractGraph(
        vertices=tuple(e.vertex_ids()),
        edges=tuple((eid, e.paths[eid].u, e.paths[eid].v) for eid in e.edge_ids()),
    )


def _cellular(e: GridEmbedding, faces: List[_Face], memo: Dict[Tuple, Optional[str]]) -> Optional[str]:
    if not e.paths or not all(face.is_disk for face in faces):
        return None
    if not is_planar(_abstract(e)).planar:
        return None
    for eid in e.edge_ids():
        if _terminal(_without(e, (eid,)), memo) is None:
            return None
    return f"cellular: {len(faces)} disk faces, every edge deletion reduces"


def _terminal(e: GridEmbedding, memo: Dict[Tuple, Optional[str]]) -> Optional[str]:
    key = e.key()
    if key in memo:
        return memo[key]
    memo[key] = rule = _first_rule(e, memo)
    return rule


def _first_rule(e: GridEmbedding, memo: Dict[Tuple, Optional[str]]) -> Optional[str]:
    _, occupancy = grid_violations(e)
    standard = e.torus == TorusKind.STANDARD
    rule = _column_rule(e, occupancy, allow_single=standard)
    if rule:
        return "meridian: " + rule
    if standard:
        flipped = _transpose(e)
        _, flipped_occupancy = grid_violations(flipped)
        rule = _column_rule(flipped, flipped_occupancy, allow_single=True)
        if rule:
            return "longitude: " + rule.replace("column", "row")

    faces = _faces(e, occupancy)
    simpler = _pendant(e) or _thin_face(e, faces)
    if simpler:
        reason, smaller = simpler
        rest = _terminal(smaller, memo)
        return f"{reason}; {rest}" if rest else None
    if standard:
        return _cellular(e, faces, memo)
    return None


def terminal_rule(e: GridEmbedding) -> Optional[str]:
    """Name of the terminal condition e satisfies, or None."""
    return _terminal(e, {})


def search_reduction(e: GridEmbedding, budget: Optional[int] = None) -> ReductionResult:
    limit = budget if budget is not None else get_settings().ORACLE_BUDGET
    rule = terminal_rule(e)
    if rule:
        return ReductionResult(outcome=OracleOutcome.REDUCED, states_explored=1, rule=rule, embedding=e)

    seen = {e.key()}
    queue = deque([e])
    while queue:
        current = queue.popleft()
        for move in candidate_moves(current):
            try:
                following = apply_move(current, move)
            except InapplicableMove:
                continue
            key = following.key()
            if key in seen:
                continue
            if len(seen) >= limit:
                logger.debug(f"Oracle budget of {limit} states exhausted")
                return ReductionResult(outcome=OracleOutcome.EXHAUSTED, states_explored=len(seen))
            seen.add(key)
            rule = terminal_rule(following)
            if rule:
                return ReductionResult(
                    outcome=OracleOutcome.REDUCED, states_explored=len(seen), rule=rule, embedding=following
                )
            queue.append(following)
    return ReductionResult(outcome=OracleOutcome.EXHAUSTED, states_explored=len(seen))


def reduction_oracle(e: GridEmbedding, budget: Optional[int] = None) -> OracleOutcome:
    return search_reduction(e, budget).outcome
