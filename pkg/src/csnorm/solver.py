"""Deduce the Culler-Shalen seminorms of a knot from its profile.

Two stages: :func:`candidate_curves` lists every coefficient vector that a
single curve of the character variety could carry given the surgery facts,
then :func:`decompositions` assembles multisets of candidates whose minimal
norms add up to S and whose norms at each small Seifert slope add up to
S + C.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from itertools import product
from typing import Optional

from .charcount import TriangleGroup, seifert_budget, total_minimal_norm
from .errors import CSNormError, ProfileError, UnderdeterminedProfileError
from .peripheral import MERIDIAN, Slope, class_of
from .seminorm import CurveSolution, SlopeSystem, classify, evaluate

log = logging.getLogger(__name__)

__all__ = [
    "CYCLIC",
    "FINITE",
    "SEIFERT",
    "MAX_S",
    "SurgeryFact",
    "RCurveHint",
    "KnotProfile",
    "Decomposition",
    "compute_S",
    "candidate_curves",
    "decompositions",
    "finite_bound",
]

CYCLIC, FINITE, SEIFERT = "cyclic", "finite", "seifert"
MAX_S = 10_000


def finite_bound(s: int) -> int:
    """Norm bound for a finite filling on a curve with minimal norm s."""
    return max(2 * s, s + 8)


@dataclass(frozen=True)
class SurgeryFact:
    """A known exceptional filling.

    A Seifert fact carries either the base orbifold cone orders ``base`` or
    an explicit ``budget`` C; with neither it is recorded but unusable.
    """

    slope: Slope
    kind: str
    base: Optional[TriangleGroup] = None
    budget: Optional[int] = None

    def __post_init__(self):
        if self.kind not in (CYCLIC, FINITE, SEIFERT):
            raise ProfileError(f"unknown surgery kind {self.kind!r}")
        if self.kind != SEIFERT and (self.base is not None or self.budget is not None):
            raise ProfileError(f"{self.kind} fact at {self.slope} cannot carry base/budget")
        if self.base is not None and self.budget is not None:
            raise ProfileError(f"Seifert fact at {self.slope}: give base or budget, not both")
        if self.budget is not None and (self.budget < 0 or self.budget % 2):
            raise ProfileError(f"Seifert budget must be even and >= 0, got {self.budget}")

    @property
    def seifert_C(self) -> Optional[int]:
        if self.base is not None:
            return seifert_budget(self.base)
        return self.budget


@dataclass(frozen=True)
class RCurveHint:
    """Side information: exactly ``count`` r-curves with this slope, each of
    minimal norm ``minimal_norm``."""

    slope: Slope
    count: int
    minimal_norm: int


@dataclass(frozen=True)
class KnotProfile:
    name: str
    boundary_slopes: SlopeSystem
    cone_orders: Optional[TriangleGroup]
    alex_det: int
    surgeries: tuple = ()
    r_curve_hints: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "boundary_slopes", SlopeSystem(self.boundary_slopes))
        object.__setattr__(self, "surgeries", tuple(self.surgeries))
        object.__setattr__(self, "r_curve_hints", tuple(self.r_curve_hints))
        validate_profile(self)

    def replace(self, **changes) -> KnotProfile:
        return replace(self, **changes)


def validate_profile(p: KnotProfile) -> None:
    """Cross-field checks; raises ProfileError naming the broken invariant."""
    sys = p.boundary_slopes
    if not sys:
        raise ProfileError("boundary_slopes must be nonempty")
    if any(b.is_meridian for b in sys):
        raise ProfileError("the meridian 1/0 is never a boundary slope of a knot")
    if p.alex_det < 1 or p.alex_det % 2 == 0:
        raise ProfileError(f"alexander_det must be a positive odd integer, got {p.alex_det}")
    seen = set()
    for f in p.surgeries:
        if f.slope.is_meridian:
            raise ProfileError("the trivial filling 1/0 is implicit and must not be listed")
        if (f.slope, f.kind) in seen:
            raise ProfileError(f"duplicate {f.kind} fact at slope {f.slope}")
        seen.add((f.slope, f.kind))
    hinted = set()
    for h in p.r_curve_hints:
        if h.slope not in sys:
            raise ProfileError(f"r-curve hint slope {h.slope} is not a boundary slope")
        if h.slope in hinted:
            raise ProfileError(f"duplicate r-curve hint for slope {h.slope}")
        hinted.add(h.slope)
        if h.count < 0:
            raise ProfileError(f"r-curve hint count must be >= 0, got {h.count}")
        if h.minimal_norm <= 0 or h.minimal_norm % 2:
            raise ProfileError(
                f"r-curve hint minimal_norm must be positive and even, got {h.minimal_norm}"
            )


@dataclass(frozen=True)
class Decomposition:
    curves: tuple
    total_S: int

    @property
    def norm_curves(self) -> list:
        return [c for c in self.curves if c.is_norm_curve]

    @property
    def r_curves(self) -> list:
        return [c for c in self.curves if not c.is_norm_curve]

    def __str__(self):
        return "{" + ", ".join(str(c) for c in self.curves) + "}"


def compute_S(profile: KnotProfile) -> int:
    if profile.cone_orders is None:
        raise UnderdeterminedProfileError(
            f"{profile.name}: no base orbifold for the two-fold branched cover"
        )
    return total_minimal_norm(profile.cone_orders, profile.alex_det).total_S


def _seifert_constraints(profile):
    out = []
    for f in profile.surgeries:
        if f.kind != SEIFERT:
            continue
        C = f.seifert_C
        if C is None:
            log.warning("%s: Seifert fact at %s has no base or budget; ignored",
                        profile.name, f.slope)
            continue
        out.append((class_of(f.slope), C))
    return out


def _enumerate_vectors(sys, S):
    """All nonzero vectors with ||mu|| = 2 sum a_j d_j <= S."""
    dens = [b.den for b in sys]
    if any(d == 0 for d in dens):
        raise CSNormError("meridian boundary slope leaves coefficients unbounded")
    ranges = [range(S // (2 * d) + 1) for d in dens]
    for vec in product(*ranges):
        if any(vec) and 2 * sum(a * d for a, d in zip(vec, dens)) <= S:
            yield vec


def candidate_curves(profile: KnotProfile, S: int) -> list:
    """Every single-curve solution compatible with the per-curve constraints.

    Sorted with norm curves first, then by coefficient vector.
    """
    if S <= 0 or S % 2:
        raise CSNormError(f"S must be a positive even integer, got {S}")
    if S > MAX_S:
        raise CSNormError(f"S = {S} exceeds the supported maximum {MAX_S}")
    sys = profile.boundary_slopes
    cyclic = [MERIDIAN] + [class_of(f.slope) for f in profile.surgeries if f.kind == CYCLIC]
    finite = [class_of(f.slope) for f in profile.surgeries if f.kind == FINITE]
    seifert = _seifert_constraints(profile)

    found = []
    for vec in _enumerate_vectors(sys, S):
        curve = classify(sys, vec)
        s = curve.s
        # the meridian is a cyclic slope, so this also enforces ||mu|| = s
        if any(evaluate(sys, vec, a) != s for a in cyclic):
            continue
        if any(evaluate(sys, vec, a) > finite_bound(s) for a in finite):
            continue
        # r-curves satisfy ||alpha|| = s * Delta(alpha, r) identically and are
        # only constrained through the global budget
        if curve.is_norm_curve and any(
            not (s <= evaluate(sys, vec, a) <= s + C) for a, C in seifert
        ):
            continue
        found.append(curve)
    found.sort(key=lambda c: (not c.is_norm_curve, c.coeffs))
    return found


def decompositions(profile: KnotProfile, relax_seifert: bool = False, S: Optional[int] = None) -> list:
    """All multisets of candidate curves consistent with the global budgets.

    With ``relax_seifert`` the Seifert equality sum ||alpha||_i = S + C is
    weakened to <=. An empty list means no decomposition exists.
    """
    if S is None:
        S = compute_S(profile)
    sys = profile.boundary_slopes
    seifert = _seifert_constraints(profile)
    hints = {h.slope: h for h in profile.r_curve_hints}

    cands = []
    for c in candidate_curves(profile, S):
        h = hints.get(c.r_slope)
        if h is not None and c.s != h.minimal_norm:
            continue
        excess = tuple(evaluate(sys, c.coeffs, a) - c.s for a, _ in seifert)
        cands.append((c, excess))
    budgets = [C for _, C in seifert]
    # partial excess can only be pruned when no candidate can lower it
    monotone = [all(e[k] >= 0 for _, e in cands) for k in range(len(seifert))]
    hint_slopes = list(hints)

    results = []
    chosen = []

    def dfs(start, remaining, excess, counts, n_norm):
        if remaining == 0:
            if n_norm == 0:
                return
            if any(counts[r] != hints[r].count for r in hint_slopes):
                return
            for e, C in zip(excess, budgets):
                if (e > C) if relax_seifert else (e != C):
                    return
            results.append(Decomposition(tuple(chosen), S))
            return
        for i in range(start, len(cands)):
            c, e = cands[i]
            if c.s > remaining:
                continue
            new_excess = tuple(a + b for a, b in zip(excess, e))
            if any(m and x > C for m, x, C in zip(monotone, new_excess, budgets)):
                continue
            r = c.r_slope
            if r in hints and counts[r] + 1 > hints[r].count:
                continue
            if r in hints:
                counts[r] += 1
            chosen.append(c)
            dfs(i, remaining - c.s, new_excess, counts, n_norm + c.is_norm_curve)
            chosen.pop()
            if r in hints:
                counts[r] -= 1

    dfs(0, S, tuple(0 for _ in seifert), {r: 0 for r in hint_slopes}, 0)
    results.sort(key=lambda d: (len(d.curves), [c.coeffs for c in d.curves]))
    return results
