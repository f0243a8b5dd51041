"""
Exception hierarchy for torus spatial-graph operations.

Structural problems (bad ids, malformed geometry, wrong input shape) are
ValueErrors. Cap signals are not: they mean a scan was cut short and the
caller has to report an indeterminate outcome instead of a trivial one.
"""

from typing import TYPE_CHECKING, List, Tuple

if TYPE_CHECKING:
    from app.schemas.validation import ValidationReport


class TorusGraphError(ValueError):
    """Base class for invalid torus-graph input."""


class StructuralError(TorusGraphError):
    """Ids do not resolve, geometry is malformed, or an operation got the wrong shape of input."""


class EmbeddingError(TorusGraphError):
    """The graph is well-formed but its edges intersect on the torus."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__(
            f"graph is not an embedding: {len(report.violations)} violation(s)"
        )


class InapplicableMove(TorusGraphError):
    """A grid move would leave the embedding invalid."""


class GraphFileError(TorusGraphError):
    """Graph file could not be parsed; carries every (line, reason) found."""

    def __init__(self, errors: List[Tuple[int, str]]):
        self.errors = errors
        summary = "; ".join(f"line {line}: {reason}" for line, reason in errors)
        super().__init__(summary)


class ScanIncomplete(Exception):
    """A bounded scan hit its cap before finishing."""

    def __init__(self, cap: int, what: str):
        self.cap = cap
        self.what = what
        super().__init__(f"{what} exceeded cap of {cap}")


class CycleCapExceeded(ScanIncomplete):
    def __init__(self, cap: int):
        super().__init__(cap, "simple-cycle enumeration")


class TreeCapExceeded(ScanIncomplete):
    def __init__(self, cap: int):
        super().__init__(cap, "spanning-tree enumeration")


class EnumerationTruncated(ScanIncomplete):
    def __init__(self, cap: int):
        super().__init__(cap, "grid embedding enumeration")
