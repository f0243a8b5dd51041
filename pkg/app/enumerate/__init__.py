"""Grid embeddings, isotopy moves and the reduction oracle."""

from app.enumerate.generator import connected_multigraphs, enumerate_grid_embeddings
from app.enumerate.grid import grid_violations, is_valid_grid_embedding
from app.enumerate.moves import apply_move, candidate_moves
from app.enumerate.oracle import reduction_oracle, search_reduction, terminal_rule

__all__ = [
    "apply_move",
    "candidate_moves",
    "connected_multigraphs",
    "enumerate_grid_embeddings",
    "grid_violations",
    "is_valid_grid_embedding",
    "reduction_oracle",
    "search_reduction",
    "terminal_rule",
]
