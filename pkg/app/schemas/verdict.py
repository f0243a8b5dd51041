"""
Verdict Schema (Pydantic)

Outcome of classifying a torus graph: Trivial, Nontrivial with one reason per
obstruction found, or Indeterminate when a bounded scan ran out before any
obstruction turned up.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator

from app.schemas.homology import Cycle, HomologyClass


class KnotStatus(str, Enum):
    UNKNOT = "Unknot"
    TORUS_KNOT = "NontrivialTorusKnot"
    SATELLITE = "NontrivialSatellite"


@dataclass(frozen=True)
class KnotVerdict:
    status: KnotStatus
    homology_class: HomologyClass


@dataclass(frozen=True)
class KnotWitness:
    cycle: Cycle
    verdict: KnotVerdict


@dataclass(frozen=True)
class LinkWitness:
    cycles: Tuple[Cycle, Cycle]
    classes: Tuple[HomologyClass, HomologyClass]


class VerdictResult(str, Enum):
    TRIVIAL = "Trivial"
    NONTRIVIAL = "Nontrivial"
    INDETERMINATE = "Indeterminate"


class Reason(str, Enum):
    NONPLANAR = "NonplanarAbstractGraph"
    KNOTTED_CYCLE = "KnottedCycle"
    NONSPLIT_LINK = "NonsplitLink"
    SCAN_INCOMPLETE = "ScanIncomplete"


class NonplanarCertificate(BaseModel):
    """Kuratowski subgraph found by the planarity test."""

    kind: Literal["K5", "K3,3"]
    edge_ids: List[str]
    detail: Optional[str] = None


class ScanStats(BaseModel):
    cycles_scanned: int = 0
    cycle_pairs_scanned: int = 0
    knot_scan_complete: bool = True
    link_scan_complete: bool = True


class Verdict(BaseModel):
    result: VerdictResult
    reasons: List[Reason] = Field(default_factory=list)
    knot_witness: Optional[KnotWitness] = None
    link_witness: Optional[LinkWitness] = None
    nonplanarity: Optional[NonplanarCertificate] = None
    stats: ScanStats = Field(default_factory=ScanStats)

    @model_validator(mode="after")
    def check_reasons(self) -> "Verdict":
        if self.result == VerdictResult.TRIVIAL and self.reasons:
            raise ValueError("a trivial verdict carries no reasons")
        if self.result == VerdictResult.NONTRIVIAL:
            if not self.reasons or Reason.SCAN_INCOMPLETE in self.reasons:
                raise ValueError("a nontrivial verdict needs at least one obstruction")
        if self.result == VerdictResult.INDETERMINATE and self.reasons != [Reason.SCAN_INCOMPLETE]:
            raise ValueError("an indeterminate verdict carries exactly ScanIncomplete")
        if (Reason.KNOTTED_CYCLE in self.reasons) != (self.knot_witness is not None):
            raise ValueError("KnottedCycle and knot_witness go together")
        if (Reason.NONSPLIT_LINK in self.reasons) != (self.link_witness is not None):
            raise ValueError("NonsplitLink and link_witness go together")
        if (Reason.NONPLANAR in self.reasons) != (self.nonplanarity is not None):
            raise ValueError("NonplanarAbstractGraph and nonplanarity go together")
        return self
