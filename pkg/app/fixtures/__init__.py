"""
Fixture Registry - builtin graphs shipped with the classifier

Torus fixtures are the graph files under the repository's fixtures/
directory. Abstract fixtures (no geometry) feed the grid enumerator.
"""

from itertools import combinations
from pathlib import Path
from typing import Callable, Dict, List

from app.cli.graph_file import parse_graph_file
from app.schemas.torus import AbstractGraph, TorusGraph

FIXTURE_DIR = Path(__file__).resolve().parents[2] / "fixtures"


def _complete(n: int) -> AbstractGraph:
    vertices = tuple(f"v{i}" for i in range(n))
    pairs = list(combinations(vertices, 2))
    return AbstractGraph(vertices=vertices, edges=tuple((f"e{k + 1}", u, v) for k, (u, v) in enumerate(pairs)))


def _complete_bipartite() -> AbstractGraph:
    left, right = ("a0", "a1", "a2"), ("b0", "b1", "b2")
    pairs = [(u, v) for u in left for v in right]
    return AbstractGraph(vertices=left + right, edges=tuple((f"e{k + 1}", u, v) for k, (u, v) in enumerate(pairs)))


def theta_graph(n: int) -> AbstractGraph:
    return AbstractGraph(vertices=("a", "b"), edges=tuple((f"e{k + 1}", "a", "b") for k in range(n)))


def is_theta_graph(g: AbstractGraph) -> bool:
    """Two vertices joined by parallel edges and nothing else."""
    return len(g.vertices) == 2 and bool(g.edges) and all(u != v for _, u, v in g.edges)


# Abstract Registry - builtin:<name> on the command line
ABSTRACT_REGISTRY: Dict[str, Callable[[], AbstractGraph]] = {
    "K5": lambda: _complete(5),
    "K33": _complete_bipartite,
    "theta3": lambda: theta_graph(3),
}


def get_abstract_fixture(name: str) -> AbstractGraph:
    builder = ABSTRACT_REGISTRY.get(name)
    if builder is None:
        raise KeyError(f"unknown builtin graph {name!r}; known: {', '.join(ABSTRACT_REGISTRY)}")
    return builder()


def list_fixtures() -> List[str]:
    return sorted(path.stem for path in FIXTURE_DIR.glob("*.tg"))


def fixture_path(name: str) -> Path:
    return FIXTURE_DIR / f"{name}.tg"


def get_fixture(name: str) -> TorusGraph:
    path = fixture_path(name)
    if not path.exists():
        raise KeyError(f"unknown fixture {name!r}; known: {', '.join(list_fixtures())}")
    return parse_graph_file(path.read_text())


__all__ = [
    "ABSTRACT_REGISTRY",
    "FIXTURE_DIR",
    "fixture_path",
    "get_abstract_fixture",
    "get_fixture",
    "is_theta_graph",
    "list_fixtures",
    "theta_graph",
]
