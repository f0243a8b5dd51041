"""Homology of cycles on the torus."""

from app.homology.classes import intersection_det, primitive_reduce, sign_normalize
from app.homology.cycles import (
    check_spanning_tree,
    cycle_class,
    cycle_vertices,
    enumerate_simple_cycles,
    enumerate_spanning_trees,
    fundamental_cycles,
    spanning_tree,
)

__all__ = [
    "check_spanning_tree",
    "cycle_class",
    "cycle_vertices",
    "enumerate_simple_cycles",
    "enumerate_spanning_trees",
    "fundamental_cycles",
    "intersection_det",
    "primitive_reduce",
    "sign_normalize",
    "spanning_tree",
]
