"""
Embedding validation report.

Points are rendered as exact rational strings ("1/3") so reports serialize
without losing precision.
"""

from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, model_validator


ViolationKind = Literal["crossing", "overlap", "vertex_on_edge", "vertex_collision"]


class Violation(BaseModel):
    kind: ViolationKind
    ids: Tuple[str, str] = Field(..., description="Edge/edge, edge/vertex or vertex/vertex pair")
    point: Tuple[str, str] = Field(..., description="Contact point in the cover of the first id")
    translate: Tuple[int, int] = Field(default=(0, 0), description="Z² translate applied to the second id")
    detail: Optional[str] = None

    def sort_key(self) -> tuple:
        from app.schemas.torus import natural_key

        return (
            natural_key(self.ids[0]),
            natural_key(self.ids[1]),
            self.kind,
            self.point,
            self.translate,
        )


class ValidationReport(BaseModel):
    ok: bool
    violations: List[Violation] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_ok_matches_violations(self) -> "ValidationReport":
        if self.ok == bool(self.violations):
            raise ValueError("ok must be true exactly when there are no violations")
        return self
