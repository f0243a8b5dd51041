"""
Knot type of simple closed curves on the torus.

On the standard torus a primitive class (p,q) is a torus knot, nontrivial
exactly when both |p| and |q| are at least 2. On a knotted torus every
curve with nonzero longitude component is a satellite of the core knot;
only p = 0 curves (meridians and inessential curves) bound disks.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from app.homology.classes import primitive_reduce
from app.homology.cycles import cycle_class, enumerate_simple_cycles
from app.schemas.homology import HomologyClass
from app.schemas.torus import TorusGraph, TorusKind
from app.schemas.verdict import KnotStatus, KnotVerdict, KnotWitness
from app.utils.errors import StructuralError

logger = logging.getLogger(__name__)


@dataclass
class ScanCounter:
    """Running totals shared by the knot and link scans of one classification."""

    cycles: int = 0
    pairs: int = 0


def knot_type(a: HomologyClass, kind: TorusKind) -> KnotVerdict:
    divisor, _ = primitive_reduce(a)
    if divisor > 1:
        raise StructuralError(f"class {a} is not realised by a simple closed curve")
    if kind == TorusKind.NONSTANDARD_KNOTTED:
        status = KnotStatus.UNKNOT if a.p == 0 else KnotStatus.SATELLITE
    else:
        status = KnotStatus.UNKNOT if min(abs(a.p), abs(a.q)) <= 1 else KnotStatus.TORUS_KNOT
    return KnotVerdict(status=status, homology_class=a)


def find_knotted_cycle(
    g: TorusGraph, cap: Optional[int] = None, counter: Optional[ScanCounter] = None
) -> Optional[KnotWitness]:
    """First simple cycle, in enumeration order, that is not an unknot."""
    for cycle in enumerate_simple_cycles(g, cap):
        if counter is not None:
            counter.cycles += 1
        verdict = knot_type(cycle_class(g, cycle), g.torus)
        if verdict.status != KnotStatus.UNKNOT:
            logger.info(
                f"Knotted cycle {' '.join(cycle.edge_ids())} with class "
                f"{verdict.homology_class} ({verdict.status.value})"
            )
            return KnotWitness(cycle=cycle, verdict=verdict)
    return None
