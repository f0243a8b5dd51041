"""
SVG diagram of a torus graph in its fundamental domain.

Each polyline segment is cut into the pieces that fall in the unit square
after integer translation, so an edge leaving one side re-enters at the
opposite one. Pieces that continue one another are drawn as a single
<polyline>, one per run between boundary crossings.
"""

from fractions import Fraction
from math import ceil, floor
from typing import List, Optional, Tuple

from app.schemas.torus import Point, TorusGraph

SIZE = 400
MARGIN = 20
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf")


def _clip(a: Point, b: Point) -> Optional[Tuple[Fraction, Point, Point]]:
    """Liang-Barsky clip of segment ab to the closed unit square, with the entry parameter."""
    low, high = Fraction(0), Fraction(1)
    dx, dy = b[0] - a[0], b[1] - a[1]
    for p, q in ((-dx, a[0]), (dx, 1 - a[0]), (-dy, a[1]), (dy, 1 - a[1])):
        if p == 0:
            if q < 0:
                return None
            continue
        r = q / p
        if p < 0:
            low = max(low, r)
        else:
            high = min(high, r)
        if low > high:
            return None
    if low == high:
        return None
    return low, (a[0] + low * dx, a[1] + low * dy), (a[0] + high * dx, a[1] + high * dy)


def _pieces(a: Point, b: Point) -> List[Tuple[Point, Point]]:
    """Pieces of ab inside the unit square, in the order ab passes through them."""
    found = []
    for tx in range(floor(min(a[0], b[0])), ceil(max(a[0], b[0])) + 1):
        for ty in range(floor(min(a[1], b[1])), ceil(max(a[1], b[1])) + 1):
            clipped = _clip((a[0] - tx, a[1] - ty), (b[0] - tx, b[1] - ty))
            if clipped is not None:
                found.append(clipped)
    return [(start, end) for _, start, end in sorted(found, key=lambda c: c[0])]


def _runs(polyline: Tuple[Point, ...]) -> List[List[Point]]:
    runs: List[List[Point]] = []
    for a, b in zip(polyline, polyline[1:]):
        for start, end in _pieces(a, b):
            if runs and runs[-1][-1] == start:
                runs[-1].append(end)
            else:
                runs.append([start, end])
    return runs


def _xy(point: Point) -> Tuple[str, str]:
    x = MARGIN + float(point[0]) * SIZE
    y = MARGIN + (1 - float(point[1])) * SIZE
    return f"{x:.3f}", f"{y:.3f}"


def render_diagram(g: TorusGraph) -> str:
    total = SIZE + 2 * MARGIN
    out: List[str] = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{total}" height="{total}" viewBox="0 0 {total} {total}">',
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{SIZE}" height="{SIZE}" fill="none" stroke="#888888" stroke-dasharray="4 4"/>',
    ]
    for index, eid in enumerate(g.edge_ids()):
        colour = PALETTE[index % len(PALETTE)]
        out.append(f'<g id="edge-{eid}" stroke="{colour}" stroke-width="2" fill="none"><title>{eid}</title>')
        for run in _runs(g.edges[eid].polyline):
            points = " ".join(",".join(_xy(p)) for p in run)
            out.append(f'<polyline points="{points}"/>')
        out.append("</g>")
    for vid in g.vertex_ids():
        cx, cy = _xy(g.coords(vid))
        out.append(f'<circle id="vertex-{vid}" cx="{cx}" cy="{cy}" r="4" fill="#000000"/>')
        out.append(f'<text x="{cx}" y="{cy}" dx="6" dy="-6" font-size="12">{vid}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
