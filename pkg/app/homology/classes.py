"""
Arithmetic on torus homology classes.
"""

from math import gcd
from typing import Tuple

from app.schemas.homology import HomologyClass


def intersection_det(a: HomologyClass, b: HomologyClass) -> int:
    """Algebraic intersection number p·q′ − q·p′."""
    return a.p * b.q - a.q * b.p


def primitive_reduce(a: HomologyClass) -> Tuple[int, HomologyClass]:
    """
    Split a class as g·(p/g, q/g) with g = gcd(|p|, |q|).

    The primitive part is sign-normalised, so a and −a reduce alike.
    (0,0) reduces to (0, (0,0)). A simple closed curve always has g ≤ 1.
    """
    g = gcd(a.p, a.q)
    if g == 0:
        return 0, a
    return g, sign_normalize(HomologyClass(a.p // g, a.q // g))


def sign_normalize(a: HomologyClass) -> HomologyClass:
    """Pick the representative of ±a whose first nonzero coordinate is positive."""
    if a.p < 0 or (a.p == 0 and a.q < 0):
        return -a
    return a


def is_meridian_or_longitude(a: HomologyClass) -> bool:
    return (abs(a.p), abs(a.q)) in {(0, 1), (1, 0)}
