"""Acceptance criteria, one test each. A PASS/FAIL line per test is printed
in the terminal summary (see conftest)."""

import itertools
import json
import math
import random
from fractions import Fraction

import pytest

from conftest import make_k4
from csnorm.charcount import TriangleGroup, psl2_irreducible_count, psl2_reducible_count, psl2_total_count
from csnorm.cli import main
from csnorm.errors import NotANormCurveError, ProfileError, ZeroCoefficientsError
from csnorm.geometry import edge_vectors, newton_polygon, norm_ball, primitive_classes_within
from csnorm.peripheral import Slope, class_of
from csnorm.profile import dump_profile, loads_profile
from csnorm.seminorm import SlopeSystem, evaluate, minimal_positive_norm
from csnorm.solver import compute_S, decompositions
from csnorm.surgery import classify_surgeries
from oracles import minkowski_vertices, naive_min_norm, naive_primitive_within, polygon_radial, radial_function

K4_SLOPES = ("-14", "0", "8/5")
K6_SLOPES = ("-18", "0", "8/7")


def test_01_irreducible_character_counts():
    assert psl2_irreducible_count(TriangleGroup(3, 3, 4)) == 3
    assert psl2_irreducible_count(TriangleGroup(2, 5, 7)) == 6


def test_02_total_minimal_norm(k4, k6):
    assert compute_S(k4) == 20
    assert compute_S(k6) == 24


def test_03_k4_unique_decomposition(k4):
    decs = decompositions(k4)
    assert len(decs) == 1
    norm_curve, r_curve = decs[0].curves
    assert norm_curve.is_norm_curve and norm_curve.coeffs == (1, 3, 1) and norm_curve.s == 18
    assert r_curve.r_slope == Slope(0) and r_curve.s == 2


def test_04_seifert_budget_equality(k4):
    (d,) = decompositions(k4)
    sys = SlopeSystem(K4_SLOPES)
    one = class_of(Slope(1))
    X0, X1 = d.curves
    assert evaluate(sys, X0.coeffs, one) == 42 == X0.s + 24
    assert evaluate(sys, X1.coeffs, one) == 2 == X1.s


def test_05_k6_unique_decomposition(k6):
    decs = decompositions(k6)
    assert len(decs) == 1
    X0, X1 = decs[0].curves
    assert k6.boundary_slopes == SlopeSystem(K6_SLOPES)
    assert X0.coeffs == (1, 3, 1) and X0.s == 22
    assert X1.r_slope == Slope(0) and X1.s == 2


def test_06_k4_fundamental_polygon():
    sys = SlopeSystem(K4_SLOPES)
    ball = norm_ball(sys, (1, 3, 1), 18)
    F = Fraction
    half = [(F(-21, 20), F(3, 40)), (F(0), F(9, 22)), (F(12, 17), F(15, 34))]
    expected = set(half) | {(-x, -y) for x, y in half}
    assert len(ball.vertices) == 6
    assert {tuple(v) for v in ball.vertices} == expected
    assert max(abs(v.y) for v in ball.vertices) < F(1, 2)
    # support-function cross-check in 360 directions
    pairs = [(-14, 1), (0, 1), (8, 5)]
    verts = [(float(v.x), float(v.y)) for v in ball.vertices]
    for k in range(360):
        th = 2 * math.pi * (k + 0.5) / 360
        assert math.isclose(radial_function(pairs, (1, 3, 1), 18, th), polygon_radial(verts, th), rel_tol=1e-9)


def test_07_surgery_exclusion(k4, k6):
    for prof in (k4, k6):
        (d,) = decompositions(prof)
        rep = classify_surgeries(d, prof.boundary_slopes)
        assert set(rep.finite_candidates) == {Slope(1, 0)}
        assert set(rep.cyclic_candidates) == {Slope(1, 0)}


def test_08_newton_polygon():
    sys = SlopeSystem(K4_SLOPES)
    poly = newton_polygon(sys, (1, 3, 1))
    expected = {(0, 28), (2, 0), (8, 0), (18, 16), (16, 44), (10, 44)}
    assert set(poly.vertices) == expected
    # brute-force Minkowski sum, translated to its bounding box
    segs = [(2 * a * d, 2 * a * c) for a, (c, d) in zip((1, 3, 1), [(-14, 1), (0, 1), (8, 5)])]
    raw = minkowski_vertices(segs)
    x0, y0 = min(p[0] for p in raw), min(p[1] for p in raw)
    assert {(x - x0, y - y0) for x, y in raw} == expected
    slopes = {Slope(dy, dx) for dx, dy in edge_vectors(poly.vertices)}
    assert slopes == {Slope(-14), Slope(0), Slope(8, 5)}
    assert poly.width == 18 == evaluate(sys, (1, 3, 1), class_of(Slope(1, 0)))
    assert poly.height == 44 == evaluate(sys, (1, 3, 1), class_of(Slope(0)))


def _random_system(rng, size):
    pool = set()
    while len(pool) < size:
        c, d = rng.randint(-9, 9), rng.randint(0, 6)
        if (c, d) != (0, 0) and math.gcd(c, d) == 1:
            pool.add(Slope(c, d))
    return SlopeSystem(sorted(pool))


def test_09_property_suites():
    rng = random.Random(20261016)
    # seminorm axioms over 10^3 class pairs
    sys = SlopeSystem(K4_SLOPES)
    coeffs = (1, 3, 1)
    for _ in range(1000):
        g = (rng.randint(-30, 30), rng.randint(-30, 30))
        h = (rng.randint(-30, 30), rng.randint(-30, 30))
        k = rng.randint(-5, 5)
        ng, nh = evaluate(sys, coeffs, g), evaluate(sys, coeffs, h)
        assert ng % 2 == 0
        assert evaluate(sys, coeffs, (k * g[0], k * g[1])) == abs(k) * ng
        assert evaluate(sys, coeffs, (g[0] + h[0], g[1] + h[1])) <= ng + nh
    # minimal positive norm against a naive scan
    for _ in range(100):
        sys = _random_system(rng, rng.randint(1, 4))
        coeffs = tuple(rng.randint(0, 4) for _ in sys)
        if not any(coeffs):
            coeffs = (1,) + coeffs[1:]
        pairs = [(s.num, s.den) for s in sys]
        assert minimal_positive_norm(sys, coeffs) == naive_min_norm(pairs, coeffs, 40)
    # primitive classes within a bound against a naive scan
    done = 0
    while done < 50:
        sys = _random_system(rng, rng.randint(2, 4))
        coeffs = tuple(rng.randint(1, 3) for _ in sys)
        pairs = [(s.num, s.den) for s in sys]
        bound = rng.randint(2, 60)
        got = {(g.x, g.y) for g in primitive_classes_within(sys, coeffs, bound)}
        assert got == naive_primitive_within(pairs, coeffs, bound, 70)
        done += 1
    # permutation invariance of the counting formulas
    for p, q, r in itertools.product(range(2, 13), repeat=3):
        ref = (psl2_total_count((p, q, r)), psl2_reducible_count((p, q, r)))
        for perm in itertools.permutations((p, q, r)):
            assert (psl2_total_count(perm), psl2_reducible_count(perm)) == ref


def test_10_negative_and_behavioral(tmp_path, capsys):
    no_hint = make_k4(hints=False)
    assert len(decompositions(no_hint)) >= 2
    path = tmp_path / "k4_nohint.json"
    path.write_text(dump_profile(no_hint), encoding="utf-8")
    assert main(["analyze", str(path)]) == 2
    capsys.readouterr()

    sys = SlopeSystem(K4_SLOPES)
    with pytest.raises(ZeroCoefficientsError):
        norm_ball(sys, (0, 0, 0), 18)
    with pytest.raises(NotANormCurveError):
        norm_ball(sys, (0, 1, 0), 18)
    with pytest.raises(ProfileError):
        loads_profile(json.dumps({"schema_version": 1, "name": "broken"}))
    kinds = {ZeroCoefficientsError, NotANormCurveError, ProfileError}
    assert len(kinds) == 3 and not any(issubclass(a, b) for a in kinds for b in kinds if a is not b)
