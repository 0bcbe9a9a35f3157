"""Static 2D pictures of Newton polygons and their multiplier ideals."""
from __future__ import annotations

import csv
import io
from fractions import Fraction

from .lattice import MonomialIdeal, contains
from .multiplier import multiplier_ideal
from .polyhedron import PointClass, classify, newton_polyhedron

CELL = 40
MARGIN = 40


def _fmt(x) -> str:
    return f"{float(Fraction(x)):.3f}"


def plot_points(ideal: MonomialIdeal, r=1):
    """Rows ``(x, y, class of (x, y), class of (x+1, y+1), in_multiplier)`` over the window."""
    if ideal.dim != 2:
        raise ValueError("plot2d needs an ideal in exactly 2 variables")
    P = newton_polyhedron(ideal)
    J = multiplier_ideal(ideal, r, P)
    ax, ay = ideal.max_exponents()
    rows = []
    for x in range(ax + 2):
        for y in range(ay + 2):
            rows.append((x, y, classify(P, (x, y)), classify(P, (x + 1, y + 1)),
                         contains(J, (x, y))))
    return rows


def render_csv(ideal: MonomialIdeal) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y", "point_class", "shifted_class", "in_multiplier_ideal"])
    for x, y, c, s, m in plot_points(ideal):
        w.writerow([x, y, c.value, s.value, int(m)])
    return buf.getvalue()


def render_svg(ideal: MonomialIdeal) -> str:
    """Polygon boundary, lattice points, and the monomials of ``J(ideal)`` highlighted."""
    P = newton_polyhedron(ideal)
    ax, ay = ideal.max_exponents()
    W, H = ax + 2, ay + 2
    width, height = W * CELL + 2 * MARGIN, H * CELL + 2 * MARGIN

    def sx(x):
        return _fmt(MARGIN + Fraction(x) * CELL)

    def sy(y):
        return _fmt(height - MARGIN - Fraction(y) * CELL)

    # boundary: vertical ray down to the top vertex, hull edges, horizontal ray
    verts = sorted(P.vertices)
    path = [(verts[0][0], H)] + verts + [(W, verts[-1][1])]
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>Multiplier ideal of ({str(ideal)})</title>",
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(W)}" y2="{sy(0)}" stroke="black"/>',
        f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{sy(H)}" stroke="black"/>',
    ]
    region = " ".join(f"{sx(x)},{sy(y)}" for x, y in path) + f" {sx(W)},{sy(H)}"
    out.append(f'<polygon points="{region}" fill="#dde8f5" stroke="none"/>')
    edge = " ".join(f"{sx(x)},{sy(y)}" for x, y in path)
    out.append(f'<polyline points="{edge}" fill="none" stroke="#1f4e8c" stroke-width="2"/>')
    for x, y, cls, shifted, in_j in plot_points(ideal):
        if in_j:
            style = 'r="5" fill="#c0392b"'
        elif cls is PointClass.BOUNDARY:
            style = 'r="4" fill="white" stroke="#1f4e8c"'
        else:
            style = 'r="2.5" fill="#555"'
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" {style}/>')
    for g in ideal.generators:
        out.append(f'<rect x="{_fmt(MARGIN + g[0] * CELL - 6)}" y="{_fmt(height - MARGIN - g[1] * CELL - 6)}" '
                   f'width="12" height="12" fill="none" stroke="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
