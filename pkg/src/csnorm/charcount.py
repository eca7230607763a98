"""Counting PSL2(C)/SL2(C) characters of triangle groups and of the
two-fold branched cover, and the norm budgets derived from those counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConeOrderError, DeterminantError

__all__ = [
    "CONTRIBUTION",
    "TriangleGroup",
    "CharacterBudget",
    "psl2_total_count",
    "psl2_reducible_count",
    "psl2_irreducible_count",
    "sl2_lift_count",
    "dihedral_count",
    "total_minimal_norm",
    "seifert_budget",
]

# Each dihedral or triangle-group SL2 character contributes this much to a
# sum of Culler-Shalen norms.
CONTRIBUTION = 2


@dataclass(frozen=True, order=True)
class TriangleGroup:
    """The orbifold group Delta(p, q, r) = <a, b | a^p, b^q, (ab)^r>.

    Cone orders are stored sorted; every count below is symmetric in them.
    """

    p: int
    q: int
    r: int

    def __post_init__(self):
        orders = tuple(int(v) for v in (self.p, self.q, self.r))
        if any(v < 2 for v in orders):
            raise ConeOrderError(f"cone orders must be >= 2, got {orders}")
        p, q, r = sorted(orders)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)

    @classmethod
    def of(cls, orders) -> TriangleGroup:
        if isinstance(orders, TriangleGroup):
            return orders
        orders = tuple(orders)
        if len(orders) != 3:
            raise ConeOrderError(f"need exactly three cone orders, got {orders}")
        return cls(*orders)

    def as_tuple(self):
        return (self.p, self.q, self.r)

    def __str__(self):
        return f"Delta({self.p},{self.q},{self.r})"


@dataclass(frozen=True)
class CharacterBudget:
    dihedral_sl2: int
    triangle_irr_sl2: int
    total_S: int


def psl2_total_count(T) -> int:
    """Number of PSL2(C)-characters of Delta(p,q,r), reducibles included."""
    p, q, r = TriangleGroup.of(T).as_tuple()
    h = lambda n: n // 2  # noqa: E731
    return (
        (p - h(p) - 1) * (q - h(q) - 1) * (r - h(r) - 1)
        + h(p) * h(q) * h(r)
        + h(math.gcd(p, q))
        + h(math.gcd(p, r))
        + h(math.gcd(q, r))
        + 1
    )


def psl2_reducible_count(T) -> int:
    """Reducible PSL2(C)-characters, i.e. characters of the abelianization
    Z/a + Z/(b/a) with a = gcd(p,q,r), b = gcd(pq,pr,qr)."""
    p, q, r = TriangleGroup.of(T).as_tuple()
    a = math.gcd(p, q, r)
    b = math.gcd(p * q, p * r, q * r)
    return b // 2 + (1 if a % 2 else 2)


def psl2_irreducible_count(T) -> int:
    n = psl2_total_count(T) - psl2_reducible_count(T)
    # Never observed for cone orders >= 2; guard against formula misuse.
    if n < 0:
        raise ConeOrderError(f"negative irreducible count for {T}")
    return n


def sl2_lift_count(n_psl2: int) -> int:
    """Each irreducible PSL2 character of the base orbifold lifts to two
    SL2 characters."""
    return 2 * n_psl2


def dihedral_count(alex_det: int) -> int:
    """Binary dihedral SL2 characters: (|Delta_K(-1)| - 1) / 2."""
    if not isinstance(alex_det, int) or isinstance(alex_det, bool):
        raise DeterminantError(f"determinant must be an int, got {alex_det!r}")
    if alex_det < 1 or alex_det % 2 == 0:
        raise DeterminantError(
            f"knot determinant must be a positive odd integer, got {alex_det}"
        )
    return (alex_det - 1) // 2


def total_minimal_norm(cone, alex_det: int) -> CharacterBudget:
    """The total minimal norm S from the two-fold branched cover data."""
    dihedral = dihedral_count(alex_det)
    triangle = sl2_lift_count(psl2_irreducible_count(TriangleGroup.of(cone)))
    return CharacterBudget(
        dihedral_sl2=dihedral,
        triangle_irr_sl2=triangle,
        total_S=CONTRIBUTION * (dihedral + triangle),
    )


def seifert_budget(base) -> int:
    """The excess C with sum_i ||alpha||_i = S + C for a small Seifert
    filling alpha whose base orbifold is S^2(p,q,r)."""
    return CONTRIBUTION * sl2_lift_count(psl2_irreducible_count(TriangleGroup.of(base)))
