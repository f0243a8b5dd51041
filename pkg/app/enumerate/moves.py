"""
Local isotopy moves on grid embeddings.

A cell slide pushes a run of one to three steps of a path across a unit
cell, replacing it with the rest of that cell's boundary. A vertex slide
moves a vertex one step, dragging the ends of its incident paths along.
Both are isotopies whenever the result is still a valid embedding, so a
move is applied only after rebuilding and re-checking.
"""

from typing import Dict, Iterator, List, Tuple

from app.enumerate.grid import grid_violations, reduce
from app.schemas.grid import DIRECTIONS, GridEmbedding, GridPath, GridPoint, Move, MoveKind
from app.utils.errors import InapplicableMove


def _corners(cell: GridPoint) -> List[GridPoint]:
    x, y = cell
    return [(x, y), (x + 1, y), (x + 1, y + 1), (x, y + 1)]


def _cells_beside(a: GridPoint, b: GridPoint) -> List[GridPoint]:
    if a[1] == b[1]:
        x = min(a[0], b[0])
        return [(x, a[1]), (x, a[1] - 1)]
    y = min(a[1], b[1])
    return [(a[0], y), (a[0] - 1, y)]


def _around_cell(run: Tuple[GridPoint, ...], cell: GridPoint) -> List[GridPoint]:
    """The other way round `cell` between the ends of `run`, or [] if run is not on its boundary."""
    corners = _corners(cell)
    if run[0] not in corners:
        return []
    start = corners.index(run[0])
    steps = len(run) - 1
    for turn in (1, -1):
        if all(run[k] == corners[(start + turn * k) % 4] for k in range(len(run))):
            return [corners[(start - turn * k) % 4] for k in range(4 - steps + 1)]
    return []


def _rebuilt(e: GridEmbedding, positions: Dict[str, GridPoint], paths: Dict[str, GridPath]) -> GridEmbedding:
    try:
        candidate = GridEmbedding(n=e.n, torus=e.torus, positions=positions, paths=paths)
    except ValueError as exc:
        raise InapplicableMove(str(exc)) from exc
    problems, _ = grid_violations(candidate)
    if problems:
        raise InapplicableMove(problems[0])
    return candidate


def _cell_slide(e: GridEmbedding, m: Move) -> GridEmbedding:
    if m.edge not in e.paths or m.cell is None or not 1 <= m.length <= 3:
        raise InapplicableMove(f"malformed cell slide {m}")
    path = e.paths[m.edge]
    points = path.points
    if m.start < 0 or m.start + m.length >= len(points):
        raise InapplicableMove(f"run outside path {m.edge}")
    run = points[m.start : m.start + m.length + 1]
    detour = _around_cell(run, m.cell)
    if not detour:
        raise InapplicableMove(f"run of {m.edge} does not follow cell {m.cell}")
    replaced = points[: m.start] + tuple(detour) + points[m.start + m.length + 1 :]
    paths = dict(e.paths)
    paths[m.edge] = GridPath(u=path.u, v=path.v, points=replaced)
    return _rebuilt(e, dict(e.positions), paths)


def _slide_start(points: Tuple[GridPoint, ...], d: GridPoint) -> Tuple[GridPoint, ...]:
    here, following = points[0], points[1]
    moved = (here[0] + d[0], here[1] + d[1])
    if following == moved:
        return points[1:]
    away = (following[0] - here[0], following[1] - here[1])
    return (moved, (moved[0] + away[0], moved[1] + away[1])) + points[1:]


def _vertex_slide(e: GridEmbedding, m: Move) -> GridEmbedding:
    if m.vertex not in e.positions or m.direction not in DIRECTIONS:
        raise InapplicableMove(f"malformed vertex slide {m}")
    d = m.direction
    n = e.n
    w = m.vertex
    old = e.positions[w]
    moved = (old[0] + d[0], old[1] + d[1])
    new_position = reduce(moved, n)
    shift = (new_position[0] - moved[0], new_position[1] - moved[1])

    paths = dict(e.paths)
    for eid, path in e.paths.items():
        points = path.points
        if path.u == w:
            points = _slide_start(points, d)
            points = tuple((x + shift[0], y + shift[1]) for x, y in points)
        if path.v == w:
            points = tuple(reversed(_slide_start(tuple(reversed(points)), d)))
        if len(points) < 2:
            raise InapplicableMove(f"path {eid} would collapse")
        if points is not path.points:
            paths[eid] = GridPath(u=path.u, v=path.v, points=points)

    positions = dict(e.positions)
    positions[w] = new_position
    return _rebuilt(e, positions, paths)


def apply_move(e: GridEmbedding, m: Move) -> GridEmbedding:
    """Raises InapplicableMove when the result would not be a valid embedding."""
    if m.kind == MoveKind.CELL_SLIDE:
        return _cell_slide(e, m)
    return _vertex_slide(e, m)


def candidate_moves(e: GridEmbedding) -> Iterator[Move]:
    """Every geometrically meaningful move, valid or not, in a fixed order."""
    for eid in e.edge_ids():
        points = e.paths[eid].points
        for start in range(len(points) - 1):
            for length in range(1, 4):
                if start + length >= len(points):
                    break
                run = points[start : start + length + 1]
                for cell in _cells_beside(run[0], run[1]):
                    if _around_cell(run, cell):
                        yield Move(kind=MoveKind.CELL_SLIDE, edge=eid, start=start, length=length, cell=cell)
    for vid in e.vertex_ids():
        for direction in DIRECTIONS:
            yield Move(kind=MoveKind.VERTEX_SLIDE, vertex=vid, direction=direction)
