"""Hand-built grid embeddings shared by the tests."""

from app.schemas.grid import GridEmbedding, GridPath
from app.schemas.torus import TorusKind


def trefoil_grid() -> GridEmbedding:
    """A (2,3) loop on the 6x6 grid, traced by repeating right, up, up, right, up."""
    motif = [(1, 0), (0, 1), (0, 1), (1, 0), (0, 1)]
    points = [(0, 0)]
    for _ in range(6):
        for dx, dy in motif:
            x, y = points[-1]
            points.append((x + dx, y + dy))
    return GridEmbedding(
        n=6,
        torus=TorusKind.STANDARD,
        positions={"w": (0, 0)},
        paths={"e1": GridPath(u="w", v="w", points=tuple(points))},
    )


def bouquet_grid() -> GridEmbedding:
    """Meridian and longitude loops at one vertex of the 3x3 grid."""
    return GridEmbedding(
        n=3,
        torus=TorusKind.STANDARD,
        positions={"w": (0, 0)},
        paths={
            "e1": GridPath(u="w", v="w", points=((0, 0), (0, 1), (0, 2), (0, 3))),
            "e2": GridPath(u="w", v="w", points=((0, 0), (1, 0), (2, 0), (3, 0))),
        },
    )


def parallel_bouquet_grid() -> GridEmbedding:
    """Two parallel (1,1) loops at one vertex of the 4x4 grid, bounding a thin strip."""
    return GridEmbedding(
        n=4,
        torus=TorusKind.STANDARD,
        positions={"w": (0, 0)},
        paths={
            "e1": GridPath(
                u="w",
                v="w",
                points=((0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4)),
            ),
            "e2": GridPath(
                u="w",
                v="w",
                points=((0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 4)),
            ),
        },
    )


def crossing_bouquet_grid() -> GridEmbedding:
    """A (1,1) loop and a (1,2) loop crossing at one vertex of the 6x6 grid."""
    one_one = [(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 3), (4, 4), (5, 4), (5, 5), (5, 6), (6, 6)]
    one_two = [
        (0, 0), (0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5),
        (4, 6), (4, 7), (5, 7), (5, 8), (5, 9), (6, 9), (6, 10), (6, 11), (6, 12),
    ]  # fmt: skip
    return GridEmbedding(
        n=6,
        torus=TorusKind.STANDARD,
        positions={"w": (0, 0)},
        paths={
            "e1": GridPath(u="w", v="w", points=tuple(one_one)),
            "e2": GridPath(u="w", v="w", points=tuple(one_two)),
        },
    )
