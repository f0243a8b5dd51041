"""
Exact planar geometry on rational points.

Everything here works on fractions.Fraction so intersection tests never
suffer rounding. Orientation is the usual 2D cross-product sign.
"""

from fractions import Fraction
from math import ceil, floor
from typing import Iterator, Optional, Sequence, Tuple

from app.schemas.torus import Point, Vector

BBox = Tuple[Fraction, Fraction, Fraction, Fraction]  # xmin, ymin, xmax, ymax


def orient(p: Point, q: Point, r: Point) -> int:
    cross = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (cross > 0) - (cross < 0)


def on_segment(a: Point, b: Point, r: Point) -> bool:
    if orient(a, b, r) != 0:
        return False
    return min(a[0], b[0]) <= r[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= r[1] <= max(a[1], b[1])


def segment_intersection(a0: Point, a1: Point, b0: Point, b1: Point) -> Optional[Tuple[Point, Point]]:
    """
    Intersection of closed segments a0a1 and b0b1.

    Returns (start, end) of the shared piece; start == end for a single
    point. None when the segments are disjoint.
    """
    o1 = orient(a0, a1, b0)
    o2 = orient(a0, a1, b1)
    o3 = orient(b0, b1, a0)
    o4 = orient(b0, b1, a1)

    if o1 == 0 and o2 == 0:
        # collinear: lexicographic order is monotone along the common line
        lo = max(min(a0, a1), min(b0, b1))
        hi = min(max(a0, a1), max(b0, b1))
        if lo > hi:
            return None
        return (lo, hi)

    if o1 * o2 > 0 or o3 * o4 > 0:
        return None

    dx, dy = a1[0] - a0[0], a1[1] - a0[1]
    ex, ey = b1[0] - b0[0], b1[1] - b0[1]
    denom = dx * ey - dy * ex
    t = ((b0[0] - a0[0]) * ey - (b0[1] - a0[1]) * ex) / denom
    point = (a0[0] + t * dx, a0[1] + t * dy)
    return (point, point)


def bbox(points: Sequence[Point]) -> BBox:
    xs = [p[0] for p in points]
    ys = [p[1] for p in points]
    return (min(xs), min(ys), max(xs), max(ys))


def translate(points: Sequence[Point], t: Vector) -> Tuple[Point, ...]:
    return tuple((x + t[0], y + t[1]) for x, y in points)


def overlapping_translates(a: BBox, b: BBox) -> Iterator[Vector]:
    """Every t ∈ Z² for which b + t meets a (closed boxes)."""
    for tx in range(ceil(a[0] - b[2]), floor(a[2] - b[0]) + 1):
        for ty in range(ceil(a[1] - b[3]), floor(a[3] - b[1]) + 1):
            yield (tx, ty)


def translates_into(box: BBox, point: Point) -> Iterator[Vector]:
    """Every t ∈ Z² for which point + t lies in box."""
    return overlapping_translates(box, (point[0], point[1], point[0], point[1]))
