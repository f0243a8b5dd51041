"""Abstract planarity with Kuratowski certificates."""

from app.planarity.planarity import PlanarityResult, exceeds_edge_bound, is_planar, simplify_graph, to_networkx

__all__ = ["PlanarityResult", "exceeds_edge_bound", "is_planar", "simplify_graph", "to_networkx"]
