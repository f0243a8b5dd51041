"""Torus graphs: exact geometry, embedding validation, per-edge homology."""

from app.torus.embedding import check_structure, components, edge_class, validate_embedding

__all__ = ["check_structure", "components", "edge_class", "validate_embedding"]
