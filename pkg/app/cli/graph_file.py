"""
Line-oriented graph file format.

    # comment
    torus standard            (or: torus knotted)
    grid 4                    (optional; records a grid size)
    vertex a 1/4 1/2
    edge e1 a b : 1/4 1/2 ; 3/4 1/2

Coordinates are exact rationals. Vertex coordinates must lie in [0,1); edge
points live in the universal cover. Corpus files hold several records
separated by lines containing only `---`.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

from app.schemas.grid import GridEmbedding, GridPath
from app.schemas.torus import EdgeGeometry, Point, TorusGraph, TorusKind, TorusPoint
from app.torus.embedding import check_structure
from app.utils.errors import GraphFileError, StructuralError

_ID = re.compile(r"^[A-Za-z0-9_.\-]+$")
_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")
RECORD_SEPARATOR = "---"


@dataclass(frozen=True)
class GraphFile:
    graph: TorusGraph
    grid: Optional[int] = None


def _rational(token: str) -> Fraction:
    if not _RATIONAL.match(token):
        raise ValueError(f"not a rational number: {token!r}")
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise ValueError(f"zero denominator in {token!r}") from None


def parse_graph_document(text: str, first_line: int = 1) -> GraphFile:
    """Parse one record. Raises GraphFileError listing every problem found."""
    errors: List[Tuple[int, str]] = []
    torus: Optional[TorusKind] = None
    grid: Optional[int] = None
    vertices: Dict[str, TorusPoint] = {}
    edges: Dict[str, EdgeGeometry] = {}
    edge_lines: Dict[str, int] = {}

    for offset, raw in enumerate(text.splitlines()):
        number = first_line + offset
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword = tokens[0]
        try:
            if keyword == "torus":
                if len(tokens) != 2:
                    raise ValueError("expected `torus standard|knotted`")
                if torus is not None:
                    raise ValueError("duplicate torus line")
                try:
                    torus = TorusKind(tokens[1])
                except ValueError:
                    raise ValueError(f"unknown torus kind {tokens[1]!r}") from None
            elif keyword == "grid":
                if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 2:
                    raise ValueError("expected `grid <n>` with n >= 2")
                if grid is not None:
                    raise ValueError("duplicate grid line")
                grid = int(tokens[1])
            elif keyword == "vertex":
                if len(tokens) != 4:
                    raise ValueError("expected `vertex <id> <x> <y>`")
                vid = tokens[1]
                if not _ID.match(vid):
                    raise ValueError(f"bad id {vid!r}")
                if vid in vertices or vid in edges:
                    raise ValueError(f"duplicate id {vid}")
                x, y = _rational(tokens[2]), _rational(tokens[3])
                if not (0 <= x < 1 and 0 <= y < 1):
                    raise ValueError(f"vertex {vid} coordinate outside [0,1)")
                vertices[vid] = TorusPoint(x, y)
            elif keyword == "edge":
                head, sep, tail = line.partition(":")
                parts = head.split()
                if not sep or len(parts) != 4:
                    raise ValueError("expected `edge <id> <u> <v> : <x> <y> ; ...`")
                eid, u, v = parts[1:]
                if not _ID.match(eid):
                    raise ValueError(f"bad id {eid!r}")
                if eid in edges or eid in vertices:
                    raise ValueError(f"duplicate id {eid}")
                points: List[Point] = []
                for chunk in tail.split(";"):
                    pair = chunk.split()
                    if len(pair) != 2:
                        raise ValueError(f"expected a point `<x> <y>`, got {chunk.strip()!r}")
                    points.append((_rational(pair[0]), _rational(pair[1])))
                edges[eid] = EdgeGeometry(u=u, v=v, polyline=tuple(points))
                edge_lines[eid] = number
            else:
                raise ValueError(f"unknown keyword {keyword!r}")
        except ValueError as exc:
            errors.append((number, str(exc)))

    if torus is None:
        errors.append((first_line, "missing `torus` line"))

    for eid, edge in edges.items():
        for end in (edge.u, edge.v):
            if end not in vertices:
                errors.append((edge_lines[eid], f"edge {eid} references unknown vertex {end}"))
        if edge.u in vertices and edge.v in vertices:
            single = TorusGraph(
                torus=TorusKind.STANDARD,
                vertices={edge.u: vertices[edge.u], edge.v: vertices[edge.v]},
                edges={eid: edge},
            )
            try:
                check_structure(single)
            except StructuralError as exc:
                errors.append((edge_lines[eid], str(exc)))

    if errors:
        raise GraphFileError(sorted(errors))
    assert torus is not None
    return GraphFile(graph=TorusGraph(torus=torus, vertices=vertices, edges=edges), grid=grid)


def parse_graph_file(text: str) -> TorusGraph:
    return parse_graph_document(text).graph


def serialize_graph_file(g: TorusGraph, grid: Optional[int] = None) -> str:
    lines = [f"torus {g.torus.value}"]
    if grid is not None:
        lines.append(f"grid {grid}")
    for vid in g.vertex_ids():
        x, y = g.coords(vid)
        lines.append(f"vertex {vid} {x} {y}")
    for eid in g.edge_ids():
        edge = g.edges[eid]
        points = " ; ".join(f"{x} {y}" for x, y in edge.polyline)
        lines.append(f"edge {eid} {edge.u} {edge.v} : {points}")
    return "\n".join(lines) + "\n"


def parse_corpus(text: str) -> List[GraphFile]:
    records: List[GraphFile] = []
    chunk: List[str] = []
    start = 1
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip() == RECORD_SEPARATOR:
            if any(part.split("#", 1)[0].strip() for part in chunk):
                records.append(parse_graph_document("\n".join(chunk), first_line=start))
            chunk = []
            start = number + 1
        else:
            chunk.append(line)
    if any(part.split("#", 1)[0].strip() for part in chunk):
        records.append(parse_graph_document("\n".join(chunk), first_line=start))
    return records


def serialize_corpus(records: Iterable[GraphFile]) -> str:
    return f"{RECORD_SEPARATOR}\n".join(serialize_graph_file(r.graph, r.grid) for r in records)


def grid_embedding_from_file(document: GraphFile) -> GridEmbedding:
    """Read a record written for a grid embedding back onto its n×n lattice."""
    if document.grid is None:
        raise StructuralError("record has no `grid` line")
    n = document.grid
    g = document.graph

    def scaled(point: Point) -> Tuple[int, int]:
        x, y = point[0] * n, point[1] * n
        if x.denominator != 1 or y.denominator != 1:
            raise StructuralError(f"point {point} is not on the {n}x{n} lattice")
        return (int(x), int(y))

    return GridEmbedding(
        n=n,
        torus=g.torus,
        positions={vid: scaled(g.coords(vid)) for vid in g.vertex_ids()},
        paths={
            eid: GridPath(u=e.u, v=e.v, points=tuple(scaled(p) for p in e.polyline))
            for eid, e in g.edges.items()
        },
    )


def serialize_grid_embedding(e: GridEmbedding) -> str:
    return serialize_graph_file(e.to_torus_graph(), grid=e.n)
