"""
Cycles, spanning trees and their homology classes.

Orderings are deterministic: trees grow breadth-first from the lowest vertex
id of each component and visit neighbours in edge-id order; simple cycles
come out grouped by their lowest vertex.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Iterator, List, Optional, Set, Tuple

import networkx as nx
from networkx.utils import UnionFind

from app.config.settings import get_settings
from app.homology.classes import primitive_reduce
from app.schemas.homology import Cycle, HomologyClass, SpanningTree
from app.schemas.torus import TorusGraph, natural_key
from app.torus.embedding import components, edge_class
from app.utils.errors import CycleCapExceeded, StructuralError, TreeCapExceeded

logger = logging.getLogger(__name__)

Step = Tuple[str, int]


def spanning_tree(g: TorusGraph) -> SpanningTree:
    visited: Set[str] = set()
    chosen: Set[str] = set()
    roots: List[str] = []
    for root in g.vertex_ids():
        if root in visited:
            continue
        roots.append(root)
        visited.add(root)
        queue = deque([root])
        while queue:
            current = queue.popleft()
            for eid, other, _ in g.incident(current):
                if other not in visited:
                    visited.add(other)
                    chosen.add(eid)
                    queue.append(other)
    return SpanningTree(edges=frozenset(chosen), roots=tuple(roots))


def check_spanning_tree(g: TorusGraph, t: SpanningTree) -> None:
    """Raise StructuralError unless t is a spanning forest of g with one root per component."""
    parts = UnionFind(g.vertices)
    for eid in sorted(t.edges, key=natural_key):
        edge = g.edge(eid)
        if parts[edge.u] == parts[edge.v]:
            raise StructuralError(f"tree edge {eid} closes a cycle")
        parts.union(edge.u, edge.v)
    tree_parts = len({parts[v] for v in g.vertices})
    if tree_parts != len(components(g)):
        raise StructuralError("tree does not span every component")


def _tree_parents(g: TorusGraph, t: SpanningTree) -> Dict[str, Optional[Tuple[str, str, int]]]:
    """vertex -> (parent vertex, edge id, direction parent→vertex), None at roots."""
    parents: Dict[str, Optional[Tuple[str, str, int]]] = {}
    for root in t.roots:
        parents[root] = None
        queue = deque([root])
        while queue:
            current = queue.popleft()
            for eid, other, direction in g.incident(current):
                if eid in t.edges and other not in parents:
                    parents[other] = (current, eid, direction)
                    queue.append(other)
    return parents


def _path_to_root(parents, vertex: str) -> List[Tuple[str, Step]]:
    """Upward steps from vertex: (vertex reached, step taken)."""
    steps = []
    while parents[vertex] is not None:
        parent, eid, direction = parents[vertex]
        steps.append((parent, (eid, -direction)))
        vertex = parent
    return steps


def _tree_path(parents, source: str, target: str) -> List[Step]:
    """Steps along the tree from source to target."""
    up_source = _path_to_root(parents, source)
    up_target = _path_to_root(parents, target)
    chain_source = [source] + [v for v, _ in up_source]
    chain_target = [target] + [v for v, _ in up_target]
    common = set(chain_target)
    meet = next(v for v in chain_source if v in common)
    forward = up_source[: chain_source.index(meet)]
    backward = up_target[: chain_target.index(meet)]
    return [step for _, step in forward] + [(eid, -d) for _, (eid, d) in reversed(backward)]


def fundamental_cycles(g: TorusGraph, t: SpanningTree) -> List[Cycle]:
    """One cycle per non-tree edge, in edge-id order, traversing that edge forward first."""
    parents = _tree_parents(g, t)
    cycles = []
    for eid in g.edge_ids():
        if eid in t.edges:
            continue
        edge = g.edges[eid]
        if edge.is_loop:
            cycles.append(Cycle(edges=((eid, 1),), base=edge.u))
            continue
        steps = [(eid, 1)] + _tree_path(parents, edge.v, edge.u)
        cycles.append(Cycle(edges=tuple(steps), base=edge.u))
    return cycles


def cycle_vertices(g: TorusGraph, c: Cycle) -> List[str]:
    """Vertices visited by c in order, starting at its base. Checks the walk closes up."""
    if not c.edges:
        raise StructuralError("empty cycle")
    current = c.base
    visited = [current]
    for eid, direction in c.edges:
        edge = g.edge(eid)
        tail, head = (edge.u, edge.v) if direction == 1 else (edge.v, edge.u)
        if direction not in (1, -1) or tail != current:
            raise StructuralError(f"cycle is not a closed walk at edge {eid}")
        current = head
        visited.append(current)
    if current != c.base:
        raise StructuralError("cycle does not return to its base")
    return visited[:-1]


def cycle_class(g: TorusGraph, c: Cycle) -> HomologyClass:
    cycle_vertices(g, c)
    p = q = 0
    for eid, direction in c.edges:
        tx, ty = edge_class(g, eid)
        p += direction * tx
        q += direction * ty
    return HomologyClass(p, q)


def simple_cycle_class(g: TorusGraph, c: Cycle) -> HomologyClass:
    """cycle_class, additionally rejecting non-primitive results."""
    cls = cycle_class(g, c)
    divisor, _ = primitive_reduce(cls)
    if divisor > 1:
        raise StructuralError(f"simple cycle has non-primitive class {cls}")
    return cls


def enumerate_simple_cycles(g: TorusGraph, cap: Optional[int] = None) -> Iterator[Cycle]:
    """
    Every simple cycle exactly once, each traversal direction counted once.

    Loops at a vertex come first, then cycles whose lowest vertex is that
    vertex, found by depth-first search through higher vertices only. Of the
    two traversal directions, the one whose first edge id sorts below its
    last edge id is kept. Raises CycleCapExceeded past `cap` cycles.
    """
    limit = cap if cap is not None else get_settings().CYCLE_CAP
    order = {v: i for i, v in enumerate(g.vertex_ids())}
    emitted = 0

    def search(start: str, current: str, on_path: Set[str], steps: List[Step]) -> Iterator[Tuple[Step, ...]]:
        for eid, other, direction in g.incident(current):
            if steps and eid == steps[-1][0]:
                continue
            if other == start and steps:
                if any(eid == used for used, _ in steps):
                    continue
                if natural_key(steps[0][0]) < natural_key(eid):
                    yield tuple(steps) + ((eid, direction),)
            elif order[other] > order[start] and other not in on_path:
                on_path.add(other)
                steps.append((eid, direction))
                yield from search(start, other, on_path, steps)
                steps.pop()
                on_path.discard(other)

    for start in g.vertex_ids():
        found: List[Cycle] = [Cycle(edges=((eid, 1),), base=start) for eid in g.loops_at(start)]
        for cycle in found:
            if emitted >= limit:
                raise CycleCapExceeded(limit)
            emitted += 1
            yield cycle
        for steps in search(start, start, {start}, []):
            if emitted >= limit:
                raise CycleCapExceeded(limit)
            emitted += 1
            yield Cycle(edges=steps, base=start)
    logger.debug(f"Enumerated {emitted} simple cycles")


def enumerate_spanning_trees(g: TorusGraph, cap: Optional[int] = None) -> Iterator[SpanningTree]:
    """
    Every spanning tree of a connected graph, by include/exclude branching on
    edges in id order. A branch excludes an edge only while the rest can
    still connect the graph, so every leaf is a tree.
    """
    limit = cap if cap is not None else get_settings().TREE_CAP
    if len(components(g)) > 1:
        raise StructuralError("spanning-tree enumeration needs a connected graph")
    vertices = g.vertex_ids()
    if not vertices:
        return
    root = vertices[0]
    needed = len(vertices) - 1
    edges = [eid for eid in g.edge_ids() if not g.edges[eid].is_loop]
    emitted = 0

    def as_graph(edge_ids: List[str]) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(vertices)
        graph.add_edges_from((g.edges[eid].u, g.edges[eid].v) for eid in edge_ids)
        return graph

    def connected(edge_ids: List[str]) -> bool:
        return nx.is_connected(as_graph(edge_ids))

    def joins_new(chosen: List[str], eid: str) -> bool:
        return not nx.has_path(as_graph(chosen), g.edges[eid].u, g.edges[eid].v)

    def branch(index: int, chosen: List[str]) -> Iterator[FrozenSet[str]]:
        if len(chosen) == needed:
            yield frozenset(chosen)
            return
        if index == len(edges):
            return
        eid = edges[index]
        if joins_new(chosen, eid):
            chosen.append(eid)
            yield from branch(index + 1, chosen)
            chosen.pop()
        if connected(chosen + edges[index + 1:]):
            yield from branch(index + 1, chosen)

    for tree in branch(0, []):
        if emitted >= limit:
            raise TreeCapExceeded(limit)
        emitted += 1
        yield SpanningTree(edges=tree, roots=(root,))
