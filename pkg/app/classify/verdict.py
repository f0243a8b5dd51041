"""
Classification of a torus graph as trivial or nontrivial.

Obstructions are looked for in a fixed order: abstract nonplanarity, then a
knotted cycle, then (standard torus only) a nonsplit link. Any obstruction
found makes the graph Nontrivial. With none found, the graph is Trivial
unless one of the cycle scans was cut short by its cap.
"""

import logging
from typing import List, Optional

from app.classify.knots import ScanCounter, find_knotted_cycle
from app.classify.links import find_nonsplit_link
from app.config.settings import get_settings
from app.planarity.planarity import is_planar
from app.schemas.torus import TorusGraph, TorusKind
from app.schemas.verdict import Reason, ScanStats, Verdict, VerdictResult
from app.torus.embedding import validate_embedding
from app.utils.errors import CycleCapExceeded, EmbeddingError

logger = logging.getLogger(__name__)


def classify(g: TorusGraph, cap: Optional[int] = None, assume_valid: bool = False) -> Verdict:
    """
    Raises EmbeddingError when g is not an embedding (skipped with
    assume_valid, for callers that built g from a checked grid embedding).
    """
    limit = cap if cap is not None else get_settings().CYCLE_CAP
    if not assume_valid:
        report = validate_embedding(g)
        if not report.ok:
            raise EmbeddingError(report)

    reasons: List[Reason] = []
    counter = ScanCounter()
    stats = ScanStats()

    planarity = is_planar(g.abstract())
    if not planarity.planar:
        reasons.append(Reason.NONPLANAR)

    knot = None
    try:
        knot = find_knotted_cycle(g, limit, counter)
    except CycleCapExceeded:
        stats.knot_scan_complete = False
        logger.warning(f"Knot scan stopped at cycle cap {limit}")
    if knot is not None:
        reasons.append(Reason.KNOTTED_CYCLE)

    link = None
    if g.torus == TorusKind.STANDARD:
        try:
            link = find_nonsplit_link(g, limit, counter)
        except CycleCapExceeded:
            stats.link_scan_complete = False
            logger.warning(f"Link scan stopped at cycle cap {limit}")
        if link is not None:
            reasons.append(Reason.NONSPLIT_LINK)

    stats.cycles_scanned = counter.cycles
    stats.cycle_pairs_scanned = counter.pairs

    if reasons:
        result = VerdictResult.NONTRIVIAL
    elif stats.knot_scan_complete and stats.link_scan_complete:
        result = VerdictResult.TRIVIAL
    else:
        result = VerdictResult.INDETERMINATE
        reasons = [Reason.SCAN_INCOMPLETE]

    logger.info(f"Classified graph: {result.value} {[r.value for r in reasons]}")
    return Verdict(
        result=result,
        reasons=reasons,
        knot_witness=knot,
        link_witness=link,
        nonplanarity=planarity.certificate,
        stats=stats,
    )
