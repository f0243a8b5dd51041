"""
Bouquets, primitivity and free families of torus classes.

Contracting a spanning tree of a connected torus graph leaves a single
vertex with one loop per non-tree edge. The graph is primitive when every
such bouquet, over every spanning tree, consists of unknots.
"""

import logging
from itertools import combinations
from typing import Iterable, List, Optional

from app.classify.knots import knot_type
from app.homology.classes import intersection_det, sign_normalize
from app.homology.cycles import (
    check_spanning_tree,
    cycle_class,
    enumerate_spanning_trees,
    fundamental_cycles,
)
from app.schemas.homology import Bouquet, HomologyClass, SpanningTree
from app.schemas.torus import TorusGraph, TorusKind
from app.schemas.verdict import KnotStatus
from app.torus.embedding import components
from app.utils.errors import StructuralError

logger = logging.getLogger(__name__)


def contract_to_bouquet(g: TorusGraph, t: SpanningTree) -> Bouquet:
    if not g.vertices:
        raise StructuralError("bouquet contraction needs at least one vertex")
    if len(components(g)) > 1:
        raise StructuralError("bouquet contraction needs a connected graph")
    check_spanning_tree(g, t)
    loops = tuple(cycle_class(g, c) for c in fundamental_cycles(g, t))
    base = t.roots[0] if t.roots else g.vertex_ids()[0]
    return Bouquet(base=base, loop_classes=loops)


def is_bouquet_trivial(b: Bouquet, kind: TorusKind) -> bool:
    return all(knot_type(cls, kind).status == KnotStatus.UNKNOT for cls in b.loop_classes)


def is_primitive(g: TorusGraph, tree_cap: Optional[int] = None) -> bool:
    """Raises TreeCapExceeded when some component has too many spanning trees."""
    for component in components(g):
        for tree in enumerate_spanning_trees(component, tree_cap):
            bouquet = contract_to_bouquet(component, tree)
            if not is_bouquet_trivial(bouquet, g.torus):
                logger.debug(f"Tree {sorted(tree.edges)} contracts to a knotted bouquet")
                return False
    return True


def is_free_family(g: TorusGraph, tree_cap: Optional[int] = None) -> bool:
    """
    Whether the complement of every connected subgraph has free fundamental
    group. Decided through primitivity; no group presentation is built.
    """
    return is_primitive(g, tree_cap)


def loop_classes_free(classes: Iterable[HomologyClass]) -> bool:
    """Essential classes whose pairwise intersection numbers are all at most 1 in size."""
    essential = [c for c in classes if c.is_essential]
    return all(abs(intersection_det(a, b)) <= 1 for a, b in combinations(essential, 2))


def is_standard_family(classes: Iterable[HomologyClass]) -> bool:
    """
    Whether the essential classes fit, up to swapping the two coordinates and
    individual signs, inside {(0,1)} ∪ {(1,k), (1,k+1)} for a single k.
    Such bouquets are exactly the knot-free ones among free families.
    """
    essential = [c for c in classes if c.is_essential]
    for swap in (False, True):
        oriented: List[HomologyClass] = [
            sign_normalize(HomologyClass(c.q, c.p) if swap else c) for c in essential
        ]
        slopes = []
        fits = True
        for c in oriented:
            if c.p == 0:
                fits = c.q == 1
            elif c.p == 1:
                slopes.append(c.q)
            else:
                fits = False
            if not fits:
                break
        if fits and (not slopes or max(slopes) - min(slopes) <= 1):
            return True
    return False
