"""
Exhaustive generation of small graphs and their grid embeddings.

Embeddings are produced up to translation of the whole torus: the lowest
vertex id is pinned to (0,0). Vertex placements come in lexicographic
order and paths are grown depth-first trying right, up, left, down.
"""

import logging
from collections import defaultdict
from itertools import permutations
from typing import Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx

from app.config.settings import get_settings
from app.enumerate.grid import SegmentKey, reduce, segment_key
from app.schemas.grid import DIRECTIONS, GridEmbedding, GridPath, GridPoint
from app.schemas.torus import AbstractGraph, TorusKind, natural_key, sorted_ids
from app.utils.errors import EnumerationTruncated, StructuralError

logger = logging.getLogger(__name__)


def _placements(vertices: List[str], n: int) -> Iterator[Dict[str, GridPoint]]:
    if not vertices:
        yield {}
        return
    others = [(x, y) for x in range(n) for y in range(n) if (x, y) != (0, 0)]
    for chosen in permutations(others, len(vertices) - 1):
        placement = {vertices[0]: (0, 0)}
        placement.update(zip(vertices[1:], chosen))
        yield placement


def _lattice_paths(
    start: GridPoint,
    target: GridPoint,
    is_loop: bool,
    n: int,
    blocked: Set[GridPoint],
    used_segments: Set[SegmentKey],
) -> Iterator[Tuple[GridPoint, ...]]:
    """Simple lattice paths in the cover from start to any translate of target."""
    path = [start]
    on_path = {reduce(start, n)}
    taken: List[SegmentKey] = []

    def grow() -> Iterator[Tuple[GridPoint, ...]]:
        here = path[-1]
        for dx, dy in DIRECTIONS:
            step = (here[0] + dx, here[1] + dy)
            key = segment_key(here, step, n)
            if key in used_segments or key in taken:
                continue
            cell = reduce(step, n)
            if cell == target:
                if is_loop and len(path) < 2:
                    continue
                yield tuple(path) + (step,)
                continue
            if cell in blocked or cell in on_path:
                continue
            path.append(step)
            on_path.add(cell)
            taken.append(key)
            yield from grow()
            taken.pop()
            on_path.discard(cell)
            path.pop()

    yield from grow()


def enumerate_grid_embeddings(
    g: AbstractGraph, n: int, limit: Optional[int] = None, torus: TorusKind = TorusKind.STANDARD
) -> Iterator[GridEmbedding]:
    """
    Every grid embedding of g on the n×n torus, up to translation.
    Raises EnumerationTruncated once more than `limit` have been produced;
    with no limit given and no TORUS_EMBEDDING_LIMIT set, the enumeration is complete.
    """
    if n < 2:
        raise StructuralError(f"grid size must be at least 2, got {n}")
    cap = limit if limit is not None else get_settings().EMBEDDING_LIMIT
    vertices = sorted_ids(g.vertices)
    if len(vertices) > n * n:
        return
    edges = sorted(g.edges, key=lambda e: natural_key(e[0]))
    emitted = 0

    for placement in _placements(vertices, n):
        vertex_cells = set(placement.values())
        occupied: Set[GridPoint] = set(vertex_cells)
        segments: Set[SegmentKey] = set()
        chosen: Dict[str, GridPath] = {}

        def route(index: int) -> Iterator[Dict[str, GridPath]]:
            if index == len(edges):
                yield dict(chosen)
                return
            eid, u, v = edges[index]
            for points in _lattice_paths(placement[u], placement[v], u == v, n, occupied, segments):
                interior = [reduce(p, n) for p in points[1:-1]]
                keys = [segment_key(a, b, n) for a, b in zip(points, points[1:])]
                occupied.update(interior)
                segments.update(k for k in keys if k is not None)
                chosen[eid] = GridPath(u=u, v=v, points=points)
                yield from route(index + 1)
                del chosen[eid]
                segments.difference_update(k for k in keys if k is not None)
                occupied.difference_update(interior)

        for paths in route(0):
            if cap is not None and emitted >= cap:
                raise EnumerationTruncated(cap)
            emitted += 1
            yield GridEmbedding(n=n, torus=torus, positions=dict(placement), paths=paths)
    logger.debug(f"Enumerated {emitted} grid embeddings on {n}x{n}")


def _invariant(graph: nx.MultiGraph) -> Tuple:
    degrees = sorted(d for _, d in graph.degree())
    loops = sorted(graph.number_of_edges(v, v) for v in graph.nodes)
    multiplicities = sorted(graph.number_of_edges(u, v) for u, v in set(graph.edges()) if u != v)
    return (graph.number_of_nodes(), tuple(degrees), tuple(loops), tuple(multiplicities))


def _as_abstract(graph: nx.MultiGraph, order: List[Tuple[int, int]]) -> AbstractGraph:
    return AbstractGraph(
        vertices=tuple(f"v{i}" for i in range(graph.number_of_nodes())),
        edges=tuple((f"e{k + 1}", f"v{a}", f"v{b}") for k, (a, b) in enumerate(order)),
    )


def connected_multigraphs(max_edges: int, max_degree: int = 4) -> Iterator[AbstractGraph]:
    """
    Connected multigraphs (loops and parallel edges allowed) with 1 to
    max_edges edges and every degree at most max_degree, one per
    isomorphism class, in order of edge count.
    """
    level: List[Tuple[nx.MultiGraph, List[Tuple[int, int]]]] = []
    seed = nx.MultiGraph()
    seed.add_node(0)
    level.append((seed, []))
    for _ in range(max_edges):
        buckets: Dict[Tuple, List[nx.MultiGraph]] = defaultdict(list)
        following: List[Tuple[nx.MultiGraph, List[Tuple[int, int]]]] = []
        for graph, order in level:
            size = graph.number_of_nodes()
            candidates = [(a, b) for a in range(size) for b in range(a, size)]
            candidates += [(a, size) for a in range(size)]
            for a, b in candidates:
                grown = graph.copy()
                grown.add_edge(a, b)
                if max(d for _, d in grown.degree()) > max_degree:
                    continue
                bucket = buckets[_invariant(grown)]
                if any(nx.is_isomorphic(grown, other) for other in bucket):
                    continue
                bucket.append(grown)
                following.append((grown, order + [(a, b)]))
        for graph, order in following:
            yield _as_abstract(graph, order)
        level = following
