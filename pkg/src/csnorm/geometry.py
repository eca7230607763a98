"""Exact planar convex geometry of a Culler-Shalen norm.

The fundamental polygon (norm ball) has vertices only in boundary-slope
directions; its dual Newton polygon is the zonotope spanned by the segments
2 a_j (d_j, c_j). All coordinates are ints or :class:`fractions.Fraction`.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

from .errors import CSNormError, NotANormCurveError, ZeroCoefficientsError
from .peripheral import class_of, is_primitive, slope_of
from .seminorm import check_coeffs, classes_within, evaluate
from .svg import render_svg, svg_string

__all__ = [
    "RationalPoint",
    "NormBallPolygon",
    "LatticePolygon",
    "norm_ball",
    "newton_polygon",
    "primitive_classes_within",
    "convex_hull",
    "edge_vectors",
    "render_svg",
    "svg_string",
]


class RationalPoint(NamedTuple):
    x: Fraction
    y: Fraction

    def __neg__(self):
        return RationalPoint(-self.x, -self.y)

    def __str__(self):
        return f"({self.x}, {self.y})"


@dataclass(frozen=True)
class NormBallPolygon:
    radius: int
    vertices: tuple


@dataclass(frozen=True)
class LatticePolygon:
    vertices: tuple

    @property
    def width(self) -> int:
        return max(v[0] for v in self.vertices) - min(v[0] for v in self.vertices)

    @property
    def height(self) -> int:
        return max(v[1] for v in self.vertices) - min(v[1] for v in self.vertices)


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _angle_cmp(u, v):
    # exact comparison of polar angles in [0, 2*pi)
    hu = 0 if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) else 1
    hv = 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1
    if hu != hv:
        return hu - hv
    c = u[0] * v[1] - u[1] * v[0]
    return -1 if c > 0 else (1 if c < 0 else 0)


def _require_norm_curve(sys, coeffs):
    coeffs = check_coeffs(sys, coeffs)
    act = [j for j, a in enumerate(coeffs) if a]
    if not act:
        raise ZeroCoefficientsError("all-zero coefficient vector")
    if len(act) == 1:
        raise NotANormCurveError(
            f"coefficients {coeffs} define an r-curve seminorm vanishing on "
            f"{sys[act[0]]}; its ball is an unbounded strip"
        )
    return coeffs, act


def norm_ball(sys, coeffs, radius: int) -> NormBallPolygon:
    """The ball of the given radius, as the polygon through the points
    +-t_j (c_j, d_j) with ||t_j (c_j, d_j)|| = radius."""
    coeffs, act = _require_norm_curve(sys, coeffs)
    if radius <= 0:
        raise CSNormError(f"radius must be positive, got {radius}")
    verts = []
    for j in act:
        g = class_of(sys[j])
        t = Fraction(radius, evaluate(sys, coeffs, g))
        v = RationalPoint(t * g.x, t * g.y)
        verts += [v, -v]
    verts.sort(key=functools.cmp_to_key(_angle_cmp))
    return NormBallPolygon(radius, tuple(verts))


def convex_hull(points) -> list:
    """Andrew's monotone chain; counterclockwise from the lowest-leftmost
    point, collinear points dropped. Exact for int/Fraction input."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def newton_polygon(sys, coeffs) -> LatticePolygon:
    """Zonotope sum of the segments [0, 2 a_j (d_j, c_j)] over active slopes,
    translated so its bounding box has lower-left corner at the origin.

    Width is ||mu|| and height is ||lambda||; edge slopes are the active
    boundary slopes. This is the dual of the ball of the given curve only;
    r-curves and reducible components contribute nothing here.
    """
    coeffs = check_coeffs(sys, coeffs)
    gens = [(2 * a * b.den, 2 * a * b.num) for a, b in zip(coeffs, sys) if a]
    if not gens:
        raise ZeroCoefficientsError("all-zero coefficient vector")
    sums = set()
    for mask in product((0, 1), repeat=len(gens)):
        sums.add((
            sum(m * g[0] for m, g in zip(mask, gens)),
            sum(m * g[1] for m, g in zip(mask, gens)),
        ))
    hull = convex_hull(sums)
    x0 = min(p[0] for p in hull)
    y0 = min(p[1] for p in hull)
    return LatticePolygon(tuple((x - x0, y - y0) for x, y in hull))


def edge_vectors(vertices) -> list:
    n = len(vertices)
    if n < 2:
        return []
    if n == 2:
        (ax, ay), (bx, by) = vertices
        return [(bx - ax, by - ay), (ax - bx, ay - by)]
    return [
        (vertices[(i + 1) % n][0] - vertices[i][0], vertices[(i + 1) % n][1] - vertices[i][1])
        for i in range(n)
    ]


def primitive_classes_within(sys, coeffs, bound: int) -> list:
    """Primitive classes of norm <= bound, one per slope (y > 0, or y = 0 and
    x > 0), sorted by slope."""
    coeffs, _ = _require_norm_curve(sys, coeffs)
    if bound <= 0:
        return []
    found = [
        g for g in classes_within(sys, coeffs, bound)
        if (g.y > 0 or g.x > 0) and is_primitive(g)
    ]
    found.sort(key=slope_of)
    return found
