"""
Classification reports.

One Report per input. The machine rendering is the pydantic JSON dump; the
text rendering lists the same fields line by line.
"""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from app.homology.cycles import cycle_class
from app.schemas.homology import Cycle
from app.schemas.torus import TorusGraph
from app.schemas.verdict import NonplanarCertificate, Reason, ScanStats, Verdict, VerdictResult


class CycleRecord(BaseModel):
    edges: List[str]
    directions: List[int]
    homology_class: Tuple[int, int]
    status: Optional[str] = None

    @classmethod
    def from_cycle(cls, g: TorusGraph, cycle: Cycle, status: Optional[str] = None) -> "CycleRecord":
        return cls(
            edges=[eid for eid, _ in cycle.edges],
            directions=[d for _, d in cycle.edges],
            homology_class=cycle_class(g, cycle).as_tuple(),
            status=status,
        )

    def describe(self) -> str:
        text = f"{' '.join(self.edges)} class ({self.homology_class[0]},{self.homology_class[1]})"
        return f"{text} {self.status}" if self.status else text


class Report(BaseModel):
    source: str
    torus: str
    verdict: VerdictResult
    reasons: List[Reason] = Field(default_factory=list)
    knot_witness: Optional[CycleRecord] = None
    link_witness: Optional[List[CycleRecord]] = None
    nonplanarity: Optional[NonplanarCertificate] = None
    stats: ScanStats


def build_report(g: TorusGraph, verdict: Verdict, source: str) -> Report:
    knot = None
    if verdict.knot_witness is not None:
        knot = CycleRecord.from_cycle(g, verdict.knot_witness.cycle, verdict.knot_witness.verdict.status.value)
    link = None
    if verdict.link_witness is not None:
        link = [CycleRecord.from_cycle(g, c) for c in verdict.link_witness.cycles]
    return Report(
        source=source,
        torus=g.torus.value,
        verdict=verdict.result,
        reasons=verdict.reasons,
        knot_witness=knot,
        link_witness=link,
        nonplanarity=verdict.nonplanarity,
        stats=verdict.stats,
    )


def render_machine(report: Report) -> str:
    return report.model_dump_json()


def render_text(report: Report) -> str:
    lines = [
        f"source: {report.source}",
        f"torus: {report.torus}",
        f"verdict: {report.verdict.value}",
        "reasons: " + (", ".join(r.value for r in report.reasons) or "none"),
    ]
    if report.nonplanarity is not None:
        cert = report.nonplanarity
        lines.append(f"nonplanarity: {cert.kind} on {' '.join(cert.edge_ids)}")
        if cert.detail:
            lines.append(f"nonplanarity detail: {cert.detail}")
    if report.knot_witness is not None:
        lines.append(f"knot witness: {report.knot_witness.describe()}")
    if report.link_witness is not None:
        for record in report.link_witness:
            lines.append(f"link witness: {record.describe()}")
    stats = report.stats
    lines.append(
        f"stats: cycles={stats.cycles_scanned} pairs={stats.cycle_pairs_scanned} "
        f"knot_scan_complete={stats.knot_scan_complete} link_scan_complete={stats.link_scan_complete}"
    )
    return "\n".join(lines)
