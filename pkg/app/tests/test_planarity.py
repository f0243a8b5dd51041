"""Tests for planarity and Kuratowski certificates."""

import random
from itertools import combinations
from typing import Dict, List, Set, Tuple

import networkx as nx

from app.fixtures import get_abstract_fixture, theta_graph
from app.planarity.planarity import exceeds_edge_bound, is_planar, simplify_graph
from app.schemas.torus import AbstractGraph


def _adjacency(g: AbstractGraph) -> Dict[str, Set[str]]:
    adjacent: Dict[str, Set[str]] = {v: set() for v in g.vertices}
    for _, u, v in g.edges:
        if u != v:
            adjacent[u].add(v)
            adjacent[v].add(u)
    return adjacent


def _disjoint_paths(adjacent, pairs: List[Tuple[str, str]], spare: Set[str]) -> bool:
    """Whether every pair can be joined by a path through unused spare vertices only."""
    if not pairs:
        return True
    (a, b), rest = pairs[0], pairs[1:]

    def extend(here: str, free: Set[str]) -> bool:
        if b in adjacent[here] and _disjoint_paths(adjacent, rest, free):
            return True
        for step in adjacent[here] & free:
            if extend(step, free - {step}):
                return True
        return False

    return extend(a, spare)


def brute_force_planar(g: AbstractGraph) -> bool:
    """Kuratowski: planar iff no subdivision of K5 or K3,3."""
    adjacent = _adjacency(g)
    vertices = list(g.vertices)
    for branch in combinations(vertices, 5):
        spare = set(vertices) - set(branch)
        if _disjoint_paths(adjacent, list(combinations(branch, 2)), spare):
            return False
    for chosen in combinations(vertices, 6):
        spare = set(vertices) - set(chosen)
        first = chosen[0]
        for others in combinations(chosen[1:], 2):
            left = (first,) + others
            right = tuple(v for v in chosen if v not in left)
            pairs = [(x, y) for x in left for y in right]
            if _disjoint_paths(adjacent, pairs, spare):
                return False
    return True


def random_graph(rng: random.Random) -> AbstractGraph:
    n = rng.randint(1, 8)
    p = rng.random()
    vertices = tuple(f"v{i}" for i in range(n))
    edges = []
    for u, v in combinations(vertices, 2):
        if rng.random() < p:
            edges.append((f"e{len(edges) + 1}", u, v))
    return AbstractGraph(vertices=vertices, edges=tuple(edges))


def test_k5_certificate():
    """Test K5 is nonplanar with a K5 certificate on all ten edges."""
    result = is_planar(get_abstract_fixture("K5"))
    assert not result.planar
    assert result.certificate.kind == "K5"
    assert len(result.certificate.edge_ids) == 10


def test_k33_certificate():
    """Test K3,3 is nonplanar with a K3,3 certificate on all nine edges."""
    result = is_planar(get_abstract_fixture("K33"))
    assert not result.planar
    assert result.certificate.kind == "K3,3"
    assert len(result.certificate.edge_ids) == 9


def test_theta_graphs_are_planar():
    """Test parallel edges alone never make a graph nonplanar."""
    for n in range(1, 6):
        assert is_planar(theta_graph(n)).planar


def test_simplify_drops_loops_and_keeps_lowest_parallel_id():
    """Test simplification of loops and parallel classes."""
    g = AbstractGraph(
        vertices=("a", "b"),
        edges=(("e10", "a", "b"), ("e2", "b", "a"), ("e3", "a", "a")),
    )
    assert simplify_graph(g).edges == (("e2", "b", "a"),)


def test_multigraph_of_k5_keeps_certificate_ids_in_input():
    """Test certificate edge ids all come from the input graph."""
    base = get_abstract_fixture("K5")
    g = AbstractGraph(
        vertices=base.vertices,
        edges=base.edges + (("e99", "v0", "v1"), ("e100", "v2", "v2")),
    )
    result = is_planar(g)
    known = {eid for eid, _, _ in g.edges}
    assert not result.planar
    assert set(result.certificate.edge_ids) <= known
    assert "e100" not in result.certificate.edge_ids


def test_edge_bound_agrees_with_main_test():
    """Test dense graphs fail the edge bound and the full test alike."""
    for n in (5, 6, 7):
        g = AbstractGraph(
            vertices=tuple(f"v{i}" for i in range(n)),
            edges=tuple((f"e{k}", u, v) for k, (u, v) in enumerate(combinations([f"v{i}" for i in range(n)], 2))),
        )
        assert exceeds_edge_bound(g)
        assert not is_planar(g).planar
        assert not nx.check_planarity(nx.complete_graph(n))[0]


def test_matches_brute_force_reference():
    """Test agreement with a Kuratowski subdivision search on random graphs."""
    rng = random.Random(20240607)
    graphs = [random_graph(rng) for _ in range(500)]
    graphs += [get_abstract_fixture("K5"), get_abstract_fixture("K33")]
    for g in graphs:
        assert is_planar(g).planar == brute_force_planar(g), g
