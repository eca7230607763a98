"""Slopes, peripheral homology classes and their intersection pairing.

Coordinates are meridian-longitude: the class ``(x, y)`` is ``x*mu + y*lambda``
and the slope ``c/d`` names the primitive class ``(c, d)``.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction
from typing import NamedTuple

from .errors import UndefinedSlopeError

__all__ = [
    "Slope",
    "PeripheralClass",
    "MERIDIAN",
    "LONGITUDE",
    "make_slope",
    "parse_slope",
    "class_of",
    "distance",
    "is_primitive",
    "slope_of",
]


@functools.total_ordering
class Slope:
    """A reduced fraction ``num/den`` in Q u {1/0}.

    ``den > 0`` except for the meridian slope, which is stored as ``1/0``.
    Instances are immutable and hashable; ordering is that of the extended
    rationals with ``1/0`` greatest.
    """

    __slots__ = ("_num", "_den")

    def __init__(self, num: int, den: int = 1):
        num, den = int(num), int(den)
        if num == 0 and den == 0:
            raise UndefinedSlopeError("0/0 is not a slope")
        if den == 0:
            num = 1
        else:
            g = math.gcd(num, den)
            num, den = num // g, den // g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "_num", num)
        object.__setattr__(self, "_den", den)

    def __setattr__(self, name, value):
        raise AttributeError("Slope is immutable")

    @property
    def num(self) -> int:
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @property
    def is_meridian(self) -> bool:
        return self._den == 0

    @property
    def is_integral(self) -> bool:
        return self._den == 1

    def _key(self):
        if self._den == 0:
            return (1, Fraction(0))
        return (0, Fraction(self._num, self._den))

    def __eq__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return (self._num, self._den) == (other._num, other._den)

    def __lt__(self, other):
        if not isinstance(other, Slope):
            return NotImplemented
        return self._key() < other._key()

    def __hash__(self):
        return hash((self._num, self._den))

    def __str__(self):
        return f"{self._num}/{self._den}"

    def __repr__(self):
        return f"Slope({self._num}, {self._den})"

    def short(self) -> str:
        """``-14`` rather than ``-14/1``; used in human-readable reports."""
        if self._den == 1:
            return str(self._num)
        return str(self)


class PeripheralClass(NamedTuple):
    """An element ``x*mu + y*lambda`` of H_1(boundary; Z). Never reduced."""

    x: int
    y: int

    def __neg__(self):
        return PeripheralClass(-self.x, -self.y)

    def __add__(self, other):
        return PeripheralClass(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return PeripheralClass(self.x - other.x, self.y - other.y)

    def scale(self, k: int) -> PeripheralClass:
        return PeripheralClass(k * self.x, k * self.y)

    def __str__(self):
        return f"({self.x},{self.y})"


MERIDIAN = PeripheralClass(1, 0)
LONGITUDE = PeripheralClass(0, 1)


def make_slope(num: int, den: int) -> Slope:
    """Reduced, sign-normalized slope; any ``den == 0`` gives ``1/0``."""
    return Slope(num, den)


def parse_slope(text) -> Slope:
    """Parse ``"c/d"``, ``"c"`` or an int into a Slope.

    >>> parse_slope("-28/-2")
    Slope(14, 1)
    """
    if isinstance(text, Slope):
        return text
    if isinstance(text, int):
        return Slope(text, 1)
    s = str(text).strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Slope(int(num), int(den))
        return Slope(int(s), 1)
    except ValueError:
        raise UndefinedSlopeError(f"cannot parse slope {text!r}") from None


def class_of(s: Slope) -> PeripheralClass:
    """The primitive class ``(num, den)`` named by ``s``."""
    return PeripheralClass(s.num, s.den)


def distance(g: PeripheralClass, b: Slope) -> int:
    """Geometric intersection number |x*d - y*c| of ``g`` with slope ``b = c/d``."""
    return abs(g[0] * b.den - g[1] * b.num)


def is_primitive(g: PeripheralClass) -> bool:
    return math.gcd(g[0], g[1]) == 1


def slope_of(g: PeripheralClass) -> Slope:
    """The slope of a nonzero class (its primitive direction, up to sign)."""
    return Slope(g[0], g[1])
