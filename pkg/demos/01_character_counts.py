"""Counting characters of triangle groups.

The PSL2(C) character variety of Delta(p,q,r) is a finite set of points.
Below, the closed-form counts are tabulated for a few small groups and then
turned into the two numbers the solver needs: the total minimal norm S and
the Seifert budget C.
"""

from csnorm import (
    TriangleGroup,
    dihedral_count,
    psl2_irreducible_count,
    psl2_reducible_count,
    psl2_total_count,
    seifert_budget,
    sl2_lift_count,
    total_minimal_norm,
)

print(f"{'group':<12}{'total':>7}{'red.':>7}{'irr.':>7}{'SL2 irr.':>10}")
for orders in [(2, 2, 2), (2, 3, 3), (2, 3, 5), (3, 3, 4), (2, 5, 7), (3, 3, 6), (4, 4, 4)]:
    T = TriangleGroup(*orders)
    irr = psl2_irreducible_count(T)
    print(
        f"{str(orders):<12}{psl2_total_count(T):>7}{psl2_reducible_count(T):>7}"
        f"{irr:>7}{sl2_lift_count(irr):>10}"
    )

# A knot with determinant 9 has (9 - 1) / 2 = 4 dihedral characters.
print("\ndihedral characters for det 9:", dihedral_count(9))

# The branched double cover of the (-3, 3, 4) pretzel knot K4 is Seifert
# fibred with base orbifold S^2(3, 3, 4).
budget = total_minimal_norm((3, 3, 4), 9)
print(f"S = 2({budget.triangle_irr_sl2} + {budget.dihedral_sl2}) = {budget.total_S}")

# Surgery at slope 1 on K4 is Seifert fibred over S^2(2, 5, 7).
print("Seifert budget C at slope 1:", seifert_budget((2, 5, 7)))
