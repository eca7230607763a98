"""The (-3,3,n) pretzel knots K_n, 1 <= n <= 6.

K_n has boundary slopes -(2n+6), 0 and 8/(n+1), two-fold branched cover
with base orbifold S^2(3,3,n), and a small Seifert filling at slope 1 (plus
2 and 3 for small n). Only K_4 and K_6 carry enough input for a full run.

Every value is either stated for these knots in the literature or forced by
a formula; ``provenance`` records which fields are derived.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .charcount import TriangleGroup
from .errors import CSNormError
from .peripheral import Slope
from .solver import SEIFERT, KnotProfile, RCurveHint, SurgeryFact

__all__ = ["CatalogEntry", "pretzel_profile", "pretzel_slopes", "catalog", "SEIFERT_SLOPES"]

SEIFERT_SLOPES = {1: (1, 2, 3), 2: (1, 2), 3: (1,), 4: (1,), 5: (1,), 6: (1,)}

# pretzel determinant |pq + pr + qr| for (-3, 3, n): |-9 + (3 - 3) n| = 9
ALEX_DET = 9

_STATUS = {
    1: "treated elsewhere: K_1 is a twist knot",
    2: "treated elsewhere: K_2 is the mirror of the (-2,3,-3) pretzel knot",
    3: "underdetermined: Seifert base of the slope-1 filling unknown; "
       "reported to have no unique solution",
    5: "underdetermined: K_5 is not strongly invertible, so the Seifert "
       "indices of the slope-1 filling are unknown",
}


@dataclass(frozen=True)
class CatalogEntry:
    n: int
    profile: KnotProfile
    status: Optional[str] = None
    expected: Optional[dict] = None
    provenance: dict = field(default_factory=dict)

    @property
    def runnable(self) -> bool:
        return self.status is None


def pretzel_slopes(n: int) -> list:
    return [Slope(-(2 * n + 6)), Slope(0), Slope(8, n + 1)]


def pretzel_profile(n: int) -> CatalogEntry:
    if not 1 <= n <= 6:
        raise CSNormError(f"catalog covers (-3,3,n) pretzel knots with 1 <= n <= 6, got n={n}")
    provenance = {
        "alexander_det": "derived: pretzel determinant |pq+pr+qr| = 9",
        "boundary_slopes": "stated: -(2n+6), 0, 8/(n+1)",
    }
    cone = TriangleGroup(3, 3, n) if n >= 2 else None
    if cone is None:
        provenance["sigma2_cone_orders"] = "none: base orbifold S^2(3,3) has only two cone points"
    hints = ()
    expected = None
    if n == 4:
        facts = [SurgeryFact(Slope(1), SEIFERT, base=TriangleGroup(2, 5, 7))]
        hints = (RCurveHint(Slope(0), 1, 2),)
        provenance["surgeries"] = "stated: slope 1 is Seifert with base S^2(2,5,7)"
        provenance["r_curve_hints"] = "stated: unique r-curve with r = 0 and s_1 = 2"
        expected = {"S": 20, "s0": 18, "coeffs": (1, 3, 1), "s1": 2,
                    "finite_candidates": ("1/0",), "bound": 36}
    elif n == 6:
        facts = [SurgeryFact(Slope(1), SEIFERT, budget=24)]
        hints = (RCurveHint(Slope(0), 1, 2),)
        provenance["surgeries"] = (
            "derived: budget 24 forced by ||1||_0 = s_0 + 24 = 46; base orbifold not stated"
        )
        provenance["r_curve_hints"] = "stated: one r-curve with r = 0 and s_1 = 2"
        expected = {"S": 24, "s0": 22, "coeffs": (1, 3, 1), "s1": 2,
                    "finite_candidates": ("1/0",), "bound": 44}
    else:
        facts = [SurgeryFact(Slope(a), SEIFERT) for a in SEIFERT_SLOPES[n]]
    profile = KnotProfile(
        name=f"K{n}",
        boundary_slopes=pretzel_slopes(n),
        cone_orders=cone,
        alex_det=ALEX_DET,
        surgeries=facts,
        r_curve_hints=hints,
    )
    return CatalogEntry(n, profile, _STATUS.get(n), expected, provenance)


def catalog() -> list:
    return [pretzel_profile(n) for n in range(1, 7)]
