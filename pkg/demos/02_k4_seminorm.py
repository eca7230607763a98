"""Pinning down the seminorm of K4 from counting data alone.

With boundary slopes -14, 0 and 8/5 the norm of every curve component is a
weighted sum of distances to those slopes. The solver searches all weight
vectors consistent with the character counts and the Seifert surgery at
slope 1, and finds exactly one answer once the r-curve at slope 0 is known.
"""

from csnorm import classify_surgeries, decompositions, pretzel_profile
from csnorm.seminorm import norm_formula

k4 = pretzel_profile(4).profile
print("boundary slopes:", ", ".join(map(str, k4.boundary_slopes)))

(dec,) = decompositions(k4)
for curve in dec.curves:
    print(f"  {curve.kind:<10} coeffs={curve.coeffs}  s={curve.s}")
    print("   ", norm_formula(k4.boundary_slopes, curve.coeffs))

# Drop the r-curve hint and the answer is no longer forced.
loose = k4.replace(r_curve_hints=())
print("\nwithout the r-curve hint:", len(decompositions(loose)), "decompositions")

report = classify_surgeries(dec, k4.boundary_slopes)
print("\nslopes with norm <= max(2 s0, s0 + 8) =", report.bound_used)
print("  cyclic candidates:", [str(s) for s in report.cyclic_candidates])
print("  finite candidates:", [str(s) for s in report.finite_candidates])
