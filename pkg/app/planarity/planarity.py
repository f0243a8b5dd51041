"""
Planarity of the abstract graph underlying a torus graph.

Loops and parallel edges never affect planarity, so the graph is simplified
first. Dense graphs fail the edge bound outright; the rest go through
networkx's left-right planarity test, whose counterexample is a Kuratowski
subgraph.
"""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional

import networkx as nx

from app.schemas.torus import AbstractGraph, natural_key, sorted_ids
from app.schemas.verdict import NonplanarCertificate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    certificate: Optional[NonplanarCertificate] = None


def simplify_graph(g: AbstractGraph) -> AbstractGraph:
    """Drop loops; keep the lowest edge id of each parallel class."""
    kept: Dict[FrozenSet[str], str] = {}
    for eid, u, v in sorted(g.edges, key=lambda e: natural_key(e[0])):
        if u == v:
            continue
        kept.setdefault(frozenset((u, v)), eid)
    ends = {eid: (u, v) for eid, u, v in g.edges}
    return AbstractGraph(
        vertices=g.vertices,
        edges=tuple((eid, *ends[eid]) for eid in sorted_ids(kept.values())),
    )


def to_networkx(g: AbstractGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    for eid, u, v in g.edges:
        if u != v and not graph.has_edge(u, v):
            graph.add_edge(u, v, id=eid)
    return graph


def exceeds_edge_bound(g: AbstractGraph) -> bool:
    """Simple planar graphs on n ≥ 3 vertices have at most 3n − 6 edges."""
    simple = simplify_graph(g)
    n, m = len(simple.vertices), len(simple.edges)
    return n >= 3 and m > 3 * n - 6


def is_planar(g: AbstractGraph) -> PlanarityResult:
    graph = to_networkx(simplify_graph(g))
    if exceeds_edge_bound(g):
        logger.debug(f"Edge bound rejects {graph.number_of_edges()} edges on {graph.number_of_nodes()} vertices")
        _, counterexample = nx.check_planarity(graph, counterexample=True)
    else:
        planar, counterexample = nx.check_planarity(graph, counterexample=True)
        if planar:
            return PlanarityResult(planar=True)

    edge_ids = sorted_ids(graph.edges[u, v]["id"] for u, v in counterexample.edges)
    branch = [v for v in counterexample.nodes if counterexample.degree(v) >= 3]
    kind = "K5" if len(branch) == 5 and all(counterexample.degree(v) == 4 for v in branch) else "K3,3"
    logger.debug(f"Nonplanar: {kind} subgraph on {len(edge_ids)} edges")
    return PlanarityResult(
        planar=False,
        certificate=NonplanarCertificate(
            kind=kind,
            edge_ids=edge_ids,
            detail="branch vertices " + " ".join(sorted_ids(branch)),
        ),
    )
