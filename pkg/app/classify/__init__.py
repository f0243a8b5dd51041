"""Knot, link and triviality classification of torus graphs."""

from app.classify.bouquet import (
    contract_to_bouquet,
    is_bouquet_trivial,
    is_free_family,
    is_primitive,
    is_standard_family,
    loop_classes_free,
)
from app.classify.knots import ScanCounter, find_knotted_cycle, knot_type
from app.classify.links import find_nonsplit_link
from app.classify.verdict import classify

__all__ = [
    "ScanCounter",
    "classify",
    "contract_to_bouquet",
    "find_knotted_cycle",
    "find_nonsplit_link",
    "is_bouquet_trivial",
    "is_free_family",
    "is_primitive",
    "is_standard_family",
    "knot_type",
    "loop_classes_free",
]
