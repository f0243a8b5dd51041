"""
Nonsplit links among disjoint cycles.

Two disjoint simple closed curves on the standard torus carry the same
class up to sign. When that class is neither inessential nor a meridian or
longitude, the pair is a (2, 2pq) torus link with nonzero linking number.
"""

import logging
from typing import List, Optional, Set, Tuple

from app.classify.knots import ScanCounter
from app.homology.classes import is_meridian_or_longitude
from app.homology.cycles import cycle_class, cycle_vertices, enumerate_simple_cycles
from app.schemas.homology import Cycle, HomologyClass
from app.schemas.torus import TorusGraph, TorusKind
from app.schemas.verdict import LinkWitness

logger = logging.getLogger(__name__)


def _links(a: HomologyClass) -> bool:
    return a.is_essential and not is_meridian_or_longitude(a)


def find_nonsplit_link(
    g: TorusGraph, cap: Optional[int] = None, counter: Optional[ScanCounter] = None
) -> Optional[LinkWitness]:
    """
    First vertex-disjoint pair of simple cycles forming a nonsplit link.
    Always None on a knotted torus, where links are out of scope.
    """
    if g.torus != TorusKind.STANDARD:
        return None
    candidates: List[Tuple[Cycle, HomologyClass, Set[str]]] = []
    for cycle in enumerate_simple_cycles(g, cap):
        cls = cycle_class(g, cycle)
        if _links(cls):
            candidates.append((cycle, cls, set(cycle_vertices(g, cycle))))

    for i, (first, first_cls, first_vertices) in enumerate(candidates):
        for second, second_cls, second_vertices in candidates[i + 1:]:
            if counter is not None:
                counter.pairs += 1
            if first_vertices & second_vertices:
                continue
            logger.info(
                f"Nonsplit link: {' '.join(first.edge_ids())} and {' '.join(second.edge_ids())} "
                f"with classes {first_cls}, {second_cls}"
            )
            return LinkWitness(cycles=(first, second), classes=(first_cls, second_cls))
    return None
