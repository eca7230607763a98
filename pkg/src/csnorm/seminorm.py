"""Culler-Shalen seminorms of the form ||g|| = 2 * sum_j a_j * Delta(g, beta_j).

A seminorm is a non-negative integer coefficient vector tied by position to a
:class:`SlopeSystem`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import CoefficientError, CSNormError, ZeroCoefficientsError
from .peripheral import MERIDIAN, PeripheralClass, Slope, class_of, distance, parse_slope

__all__ = [
    "SlopeSystem",
    "CurveSolution",
    "check_coeffs",
    "active_indices",
    "evaluate",
    "minimal_positive_norm",
    "classify",
    "strip_box",
    "norm_formula",
]


class SlopeSystem(tuple):
    """An ordered tuple of pairwise distinct slopes beta_1, ..., beta_m."""

    def __new__(cls, slopes):
        slopes = tuple(parse_slope(s) for s in slopes)
        if len(set(slopes)) != len(slopes):
            raise CSNormError(f"boundary slopes must be distinct: {[str(s) for s in slopes]}")
        return super().__new__(cls, slopes)

    def __repr__(self):
        return "SlopeSystem([%s])" % ", ".join(repr(str(s)) for s in self)

    def index(self, slope, *args) -> int:
        return super().index(parse_slope(slope), *args)


@dataclass(frozen=True)
class CurveSolution:
    """One component's seminorm: coefficients, minimal norm and kind.

    ``r_slope`` is None for a norm curve, otherwise the unique boundary slope
    whose coefficient is positive.
    """

    coeffs: tuple
    s: int
    r_slope: Optional[Slope] = None

    @property
    def is_norm_curve(self) -> bool:
        return self.r_slope is None

    @property
    def kind(self) -> str:
        return "NormCurve" if self.r_slope is None else f"RCurve({self.r_slope})"

    def __str__(self):
        return f"{self.kind} {tuple(self.coeffs)} s={self.s}"


def check_coeffs(sys: SlopeSystem, coeffs: Sequence[int]) -> tuple:
    coeffs = tuple(int(a) for a in coeffs)
    if len(coeffs) != len(sys):
        raise CoefficientError(
            f"{len(coeffs)} coefficients for {len(sys)} boundary slopes"
        )
    if any(a < 0 for a in coeffs):
        raise CoefficientError(f"coefficients must be non-negative: {coeffs}")
    return coeffs


def active_indices(sys, coeffs) -> list:
    return [j for j, a in enumerate(check_coeffs(sys, coeffs)) if a > 0]


def evaluate(sys: SlopeSystem, coeffs: Sequence[int], g) -> int:
    coeffs = check_coeffs(sys, coeffs)
    return 2 * sum(a * distance(g, b) for a, b in zip(coeffs, sys) if a)


def strip_box(sys, coeffs, bound: int):
    """Integer half-widths ``(X, Y)`` such that every class of norm <= bound
    satisfies |x| <= X and |y| <= Y.

    Needs two active slopes. For active j the class lies in the strip
    |d_j x - c_j y| <= bound / (2 a_j) = w_j. Two strips with distinct
    slopes meet in a parallelogram; inverting the 2x2 system gives
    |x| <= (|c_k| w_j + |c_j| w_k) / D and |y| <= (d_k w_j + d_j w_k) / D
    with D = |d_j c_k - c_j d_k| >= 1. The pair giving the smallest box wins.
    """
    act = active_indices(sys, coeffs)
    if len(act) < 2:
        raise CSNormError("a bounded box needs at least two active slopes")
    best = None
    for i, j in enumerate(act):
        for k in act[i + 1:]:
            bj, bk = sys[j], sys[k]
            wj = Fraction(bound, 2 * coeffs[j])
            wk = Fraction(bound, 2 * coeffs[k])
            det = abs(bj.den * bk.num - bj.num * bk.den)
            X = math.floor((abs(bk.num) * wj + abs(bj.num) * wk) / det)
            Y = math.floor((bk.den * wj + bj.den * wk) / det)
            if best is None or (2 * X + 1) * (2 * Y + 1) < (2 * best[0] + 1) * (2 * best[1] + 1):
                best = (X, Y)
    return best


def _x_range(sys, coeffs, act, bound, y):
    """Range of x with every active strip |d x - c y| <= bound/(2a) satisfied."""
    lo, hi = None, None
    for j in act:
        b = sys[j]
        w = Fraction(bound, 2 * coeffs[j])
        if b.den == 0:
            if abs(y) > w:
                return range(0)
            continue
        cur_lo = math.ceil((b.num * y - w) / b.den)
        cur_hi = math.floor((b.num * y + w) / b.den)
        lo = cur_lo if lo is None else max(lo, cur_lo)
        hi = cur_hi if hi is None else min(hi, cur_hi)
    return range(lo, hi + 1)


def classes_within(sys, coeffs, bound: int):
    """Yield every class (x, y) with y >= 0 whose norm is <= bound.

    Only defined for norm curves (bounded balls). Yields in (y, x) order.
    """
    coeffs = check_coeffs(sys, coeffs)
    act = [j for j, a in enumerate(coeffs) if a]
    _, Y = strip_box(sys, coeffs, bound)
    for y in range(0, Y + 1):
        for x in _x_range(sys, coeffs, act, bound, y):
            g = PeripheralClass(x, y)
            if evaluate(sys, coeffs, g) <= bound:
                yield g


def minimal_positive_norm(sys: SlopeSystem, coeffs: Sequence[int]) -> int:
    """Smallest positive value of the seminorm on H_1(boundary; Z).

    With one active slope c/d the seminorm is 2a|d x - c y|, whose least
    positive value 2a is attained because gcd(c, d) = 1. Otherwise the
    norm of the meridian (or of any active slope class) bounds the minimum
    and :func:`strip_box` confines the search to a finite box.
    """
    coeffs = check_coeffs(sys, coeffs)
    act = [j for j, a in enumerate(coeffs) if a]
    if not act:
        raise ZeroCoefficientsError("all-zero coefficient vector has no minimal norm")
    if len(act) == 1:
        return 2 * coeffs[act[0]]
    witnesses = [MERIDIAN] + [class_of(sys[j]) for j in act]
    best = min(v for v in (evaluate(sys, coeffs, g) for g in witnesses) if v > 0)
    for g in classes_within(sys, coeffs, best):
        v = evaluate(sys, coeffs, g)
        if 0 < v < best:
            best = v
    return best


def classify(sys: SlopeSystem, coeffs: Sequence[int]) -> CurveSolution:
    coeffs = check_coeffs(sys, coeffs)
    act = [j for j, a in enumerate(coeffs) if a]
    if not act:
        raise ZeroCoefficientsError("all-zero coefficient vector is not a curve")
    r_slope = sys[act[0]] if len(act) == 1 else None
    return CurveSolution(coeffs, minimal_positive_norm(sys, coeffs), r_slope)


def norm_formula(sys, coeffs, index: int = 0) -> str:
    """Render ``||g||_i = 2[D(g,b1) + 3D(g,b2) + ...]`` in plain text."""
    coeffs = check_coeffs(sys, coeffs)
    terms = []
    for a, b in zip(coeffs, sys):
        if a:
            terms.append(("" if a == 1 else str(a)) + f"D(g,{b.short()})")
    return f"||g||_{index} = 2[" + " + ".join(terms) + "]"
