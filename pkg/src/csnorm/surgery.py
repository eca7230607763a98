"""Exceptional-surgery candidates surviving the Culler-Shalen bounds.

A slope alpha is a cyclic candidate when ||alpha||_0 = s_0 on the norm curve
and a finite candidate when ||alpha||_0 <= max(2 s_0, s_0 + 8). Survivors are
*not excluded* by these bounds; nothing here confirms a surgery.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NormCurveCountError
from .geometry import primitive_classes_within
from .peripheral import slope_of
from .seminorm import evaluate
from .solver import finite_bound

__all__ = ["SurgeryReport", "classify_surgeries"]


@dataclass(frozen=True)
class SurgeryReport:
    cyclic_candidates: tuple
    finite_candidates: tuple
    bound_used: int
    boundary_slope_flags: tuple
    s0: int

    def as_dict(self) -> dict:
        return {
            "cyclic_candidates": [str(s) for s in self.cyclic_candidates],
            "finite_candidates": [str(s) for s in self.finite_candidates],
            "bound_used": self.bound_used,
            "boundary_slope_flags": [str(s) for s in self.boundary_slope_flags],
            "s0": self.s0,
        }


def classify_surgeries(decomp, sys) -> SurgeryReport:
    norm_curves = [c for c in decomp.curves if c.is_norm_curve]
    if len(norm_curves) != 1:
        raise NormCurveCountError(
            f"surgery bounds need exactly one norm curve, found {len(norm_curves)}"
        )
    X0 = norm_curves[0]
    bound = finite_bound(X0.s)
    finite, cyclic = [], []
    for g in primitive_classes_within(sys, X0.coeffs, bound):
        slope = slope_of(g)
        finite.append(slope)
        if evaluate(sys, X0.coeffs, g) == X0.s:
            cyclic.append(slope)
    flags = tuple(s for s in finite if s in sys)
    return SurgeryReport(tuple(cyclic), tuple(finite), bound, flags, X0.s)
