"""Drawing the norm ball of K4 and its Newton polygon.

Both pictures are written as SVG next to this script. The dashed line marks
y = 1/2; the whole ball sits strictly below it, which is what rules out
non-trivial finite surgeries.
"""

from fractions import Fraction
from pathlib import Path

from csnorm import SlopeSystem, newton_polygon, norm_ball, render_svg

sys_ = SlopeSystem(["-14", "0", "8/5"])
coeffs = (1, 3, 1)
out = Path(__file__).with_name("out")
out.mkdir(exist_ok=True)

ball = norm_ball(sys_, coeffs, 18)
for v in ball.vertices:
    print("ball vertex", v)
print("max |y| =", max(abs(v.y) for v in ball.vertices))
render_svg(ball, out / "k4_ball.svg", title="K4 norm ball, radius 18", guides=(Fraction(1, 2),))

newton = newton_polygon(sys_, coeffs)
print("\nNewton polygon:", newton.vertices)
print("width", newton.width, "height", newton.height)
render_svg(newton, out / "k4_newton.svg", title="K4 Newton polygon")
print("\nwrote", *sorted(p.name for p in out.glob("*.svg")))
