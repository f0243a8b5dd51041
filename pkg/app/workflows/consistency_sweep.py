"""Exhaustive consistency sweep over small grid embeddings.

Enumerates every connected multigraph up to a number of edges, every grid
embedding of it on the n×n torus, and cross-checks the homological
classifier against the isotopy oracle and against the structural facts
the classifier relies on. Counts are reported, never asserted; any
disagreement becomes a violation in the report.
"""

import logging
import time
from itertools import combinations
from typing import Dict, List, Optional, Set, Tuple

from pydantic import BaseModel, Field
from ulid import ULID

from app.classify.bouquet import is_primitive, is_standard_family, loop_classes_free
from app.classify.links import find_nonsplit_link
from app.classify.verdict import classify
from app.cli.graph_file import serialize_grid_embedding
from app.config.settings import get_settings
from app.enumerate.generator import connected_multigraphs, enumerate_grid_embeddings
from app.enumerate.oracle import reduction_oracle
from app.fixtures import is_theta_graph
from app.homology.classes import intersection_det, primitive_reduce
from app.homology.cycles import cycle_class, cycle_vertices, enumerate_simple_cycles
from app.planarity.planarity import is_planar
from app.schemas.grid import GridEmbedding, OracleOutcome
from app.schemas.homology import HomologyClass
from app.schemas.torus import AbstractGraph, TorusGraph
from app.schemas.verdict import Reason, Verdict, VerdictResult
from app.utils.errors import EnumerationTruncated, ScanIncomplete

logger = logging.getLogger(__name__)

CRITERIA = {
    "oracle": "Trivial verdicts reduce; knot and link witnesses never do",
    "bouquet-family": "Bouquet loop classes form a free family; knot-free ones a standard family",
    "disjoint-parallel": "Vertex-disjoint essential cycles have intersection number 0",
    "single-contact": "Cycles meeting in one vertex have intersection number at most 1 in size",
    "primitive-class": "Every simple cycle class is (0,0) or primitive",
    "theta": "Theta graphs never contain links and are nontrivial only through knots",
    "chain": "Trivial exactly when primitive and link-free",
}


class SweepViolation(BaseModel):
    criterion: str
    graph: str
    detail: str
    embedding: str = Field(..., description="Graph file text of the offending grid embedding")


class SweepReport(BaseModel):
    run_id: str
    grid: int
    max_edges: int
    budget: int
    embedding_limit: Optional[int] = None
    graphs: int = 0
    nonplanar_graphs: int = 0
    instances: int = 0
    trivial: int = 0
    nontrivial: int = 0
    indeterminate: int = 0
    reduced: int = 0
    exhausted: int = 0
    bouquets_checked: int = 0
    theta_checked: int = 0
    chain_checked: int = 0
    chain_skipped: int = 0
    homology_skipped: int = 0
    truncated_graphs: List[str] = Field(default_factory=list)
    violations: List[SweepViolation] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations


def describe_graph(g: AbstractGraph) -> str:
    return " ".join(f"{u}-{v}" for _, u, v in g.edges)


class _Instance:
    """One grid embedding with its classification, checked against every criterion."""

    def __init__(self, graph: AbstractGraph, embedding: GridEmbedding, report: SweepReport, cap: int):
        self.graph = graph
        self.embedding = embedding
        self.torus_graph: TorusGraph = embedding.to_torus_graph()
        self.report = report
        self.cap = cap

    def flag(self, criterion: str, detail: str) -> None:
        logger.warning(f"Sweep violation [{criterion}] on {describe_graph(self.graph)}: {detail}")
        self.report.violations.append(
            SweepViolation(
                criterion=criterion,
                graph=describe_graph(self.graph),
                detail=detail,
                embedding=serialize_grid_embedding(self.embedding),
            )
        )

    def cycles(self) -> List[Tuple[HomologyClass, Set[str]]]:
        g = self.torus_graph
        return [
            (cycle_class(g, c), set(cycle_vertices(g, c)))
            for c in enumerate_simple_cycles(g, self.cap)
        ]

    def check_oracle(self, verdict: Verdict, budget: int) -> None:
        outcome = reduction_oracle(self.embedding, budget)
        if outcome == OracleOutcome.REDUCED:
            self.report.reduced += 1
        else:
            self.report.exhausted += 1
        witnessed = Reason.KNOTTED_CYCLE in verdict.reasons or Reason.NONSPLIT_LINK in verdict.reasons
        if verdict.result == VerdictResult.TRIVIAL and outcome == OracleOutcome.EXHAUSTED:
            self.flag("oracle", "classified Trivial but the oracle found no reduction")
        if witnessed and outcome == OracleOutcome.REDUCED:
            self.flag("oracle", f"witness {[r.value for r in verdict.reasons]} but the oracle reduced it")

    def check_homology(self, cycles: List[Tuple[HomologyClass, Set[str]]]) -> None:
        for cls, _ in cycles:
            divisor, _ = primitive_reduce(cls)
            if divisor > 1:
                self.flag("primitive-class", f"simple cycle with class {cls}")
        for (a, va), (b, vb) in combinations(cycles, 2):
            shared = len(va & vb)
            det = intersection_det(a, b)
            if shared == 0 and a.is_essential and b.is_essential and det != 0:
                self.flag("disjoint-parallel", f"disjoint cycles {a} and {b} have det {det}")
            if shared == 1 and abs(det) > 1:
                self.flag("single-contact", f"cycles {a} and {b} share one vertex but have det {det}")

    def check_bouquet(self, verdict: Verdict, cycles: List[Tuple[HomologyClass, Set[str]]]) -> None:
        if len(self.graph.vertices) != 1 or len(self.graph.edges) > 3:
            return
        self.report.bouquets_checked += 1
        classes = [cls for cls, _ in cycles]
        if not loop_classes_free(classes):
            self.flag("bouquet-family", f"loop classes {[str(c) for c in classes]} are not a free family")
        if verdict.result == VerdictResult.TRIVIAL and not is_standard_family(classes):
            self.flag("bouquet-family", f"knot-free loop classes {[str(c) for c in classes]} outside the standard family")

    def check_theta(self, verdict: Verdict) -> None:
        if not is_theta_graph(self.graph) or len(self.graph.edges) > 4:
            return
        self.report.theta_checked += 1
        if find_nonsplit_link(self.torus_graph, self.cap) is not None:
            self.flag("theta", "theta graph contains a nonsplit link")
        if verdict.result == VerdictResult.NONTRIVIAL and Reason.KNOTTED_CYCLE not in verdict.reasons:
            self.flag("theta", f"nontrivial without a knotted cycle: {[r.value for r in verdict.reasons]}")

    def check_chain(self, verdict: Verdict) -> None:
        if verdict.result == VerdictResult.INDETERMINATE:
            self.report.chain_skipped += 1
            return
        try:
            primitive = is_primitive(self.torus_graph)
        except ScanIncomplete:
            self.report.chain_skipped += 1
            return
        self.report.chain_checked += 1
        expected = primitive and verdict.link_witness is None
        if (verdict.result == VerdictResult.TRIVIAL) != expected:
            self.flag(
                "chain",
                f"verdict {verdict.result.value} but primitive={primitive} link={verdict.link_witness is not None}",
            )


def run_consistency_sweep(
    grid: Optional[int] = None,
    max_edges: Optional[int] = None,
    budget: Optional[int] = None,
    embedding_limit: Optional[int] = None,
    cap: Optional[int] = None,
    bouquets_only: bool = False,
) -> SweepReport:
    """Run the consistency sweep.

    Args:
        grid: Grid size n of the n×n torus
        max_edges: Largest number of edges of the enumerated multigraphs
        budget: State budget of each reduction-oracle search
        embedding_limit: Per-graph cap on grid embeddings, unbounded when unset; graphs hitting it are listed as truncated
        cap: Simple-cycle cap for classification
        bouquets_only: Restrict the sweep to one-vertex graphs

    Returns:
        SweepReport with instance counts and every violation found
    """
    settings = get_settings()
    report = SweepReport(
        run_id=str(ULID()),
        grid=grid or settings.GRID_SIZE,
        max_edges=max_edges or settings.MAX_EDGES,
        budget=budget or settings.ORACLE_BUDGET,
        embedding_limit=embedding_limit if embedding_limit is not None else settings.EMBEDDING_LIMIT,
    )
    cycle_cap = cap if cap is not None else settings.CYCLE_CAP
    started = time.monotonic()
    logger.info(
        f"Sweep {report.run_id}: grid={report.grid} max_edges={report.max_edges} budget={report.budget}"
    )

    for graph in connected_multigraphs(report.max_edges, max_degree=4):
        if bouquets_only and len(graph.vertices) != 1:
            continue
        report.graphs += 1
        if not is_planar(graph).planar:
            report.nonplanar_graphs += 1
            continue
        try:
            for embedding in enumerate_grid_embeddings(graph, report.grid, report.embedding_limit):
                _check_instance(graph, embedding, report, cycle_cap)
        except EnumerationTruncated:
            report.truncated_graphs.append(describe_graph(graph))
            logger.info(f"Embedding limit reached for {describe_graph(graph)}")

    report.elapsed_seconds = round(time.monotonic() - started, 3)
    logger.info(
        f"Sweep {report.run_id} done: {report.instances} instances, "
        f"{len(report.violations)} violations in {report.elapsed_seconds}s"
    )
    return report


def _check_instance(graph: AbstractGraph, embedding: GridEmbedding, report: SweepReport, cap: int) -> None:
    instance = _Instance(graph, embedding, report, cap)
    report.instances += 1
    verdict = classify(instance.torus_graph, cap, assume_valid=True)
    counts: Dict[VerdictResult, str] = {
        VerdictResult.TRIVIAL: "trivial",
        VerdictResult.NONTRIVIAL: "nontrivial",
        VerdictResult.INDETERMINATE: "indeterminate",
    }
    field_name = counts[verdict.result]
    setattr(report, field_name, getattr(report, field_name) + 1)

    instance.check_oracle(verdict, report.budget)
    try:
        cycles = instance.cycles()
    except ScanIncomplete:
        report.homology_skipped += 1
        logger.info(f"Cycle cap reached on {describe_graph(graph)}; homology checks skipped")
    else:
        instance.check_homology(cycles)
        instance.check_bouquet(verdict, cycles)
    instance.check_theta(verdict)
    instance.check_chain(verdict)
