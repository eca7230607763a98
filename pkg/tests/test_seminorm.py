import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from csnorm.errors import CoefficientError, ZeroCoefficientsError
from csnorm.peripheral import MERIDIAN, PeripheralClass, Slope, class_of
from csnorm.seminorm import (
    SlopeSystem,
    classify,
    evaluate,
    minimal_positive_norm,
    norm_formula,
    strip_box,
)
from oracles import naive_min_norm, norm


@pytest.mark.parametrize("g, value", [((1, 0), 18), ((1, 1), 42), ((0, 1), 44)])
def test_evaluate_k4(k4_slopes, g, value):
    assert evaluate(k4_slopes, (1, 3, 1), PeripheralClass(*g)) == value


def test_evaluate_length_mismatch(k4_slopes):
    with pytest.raises(CoefficientError):
        evaluate(k4_slopes, (1, 3), MERIDIAN)
    with pytest.raises(CoefficientError):
        evaluate(k4_slopes, (1, -1, 0), MERIDIAN)


def test_minimal_positive_norm_examples(k4_slopes):
    assert minimal_positive_norm(k4_slopes, (1, 3, 1)) == 18
    assert minimal_positive_norm(k4_slopes, (0, 1, 0)) == 2
    assert minimal_positive_norm(SlopeSystem(["0/1"]), (5,)) == 10


def test_zero_vector_rejected(k4_slopes):
    with pytest.raises(ZeroCoefficientsError):
        minimal_positive_norm(k4_slopes, (0, 0, 0))
    with pytest.raises(ZeroCoefficientsError):
        classify(k4_slopes, (0, 0, 0))


def test_classify(k4_slopes):
    c = classify(k4_slopes, (1, 3, 1))
    assert c.is_norm_curve and c.s == 18
    c = classify(k4_slopes, (0, 1, 0))
    assert c.r_slope == Slope(0) and c.s == 2
    c = classify(k4_slopes, (0, 0, 2))
    assert c.r_slope == Slope(8, 5) and c.s == 4


def test_duplicate_slopes_rejected():
    with pytest.raises(ValueError):
        SlopeSystem(["0", "0/3"])


def test_norm_formula(k4_slopes):
    assert norm_formula(k4_slopes, (1, 3, 1)) == "||g||_0 = 2[D(g,-14) + 3D(g,0) + D(g,8/5)]"


def test_strip_box_contains_every_small_class(k4_slopes):
    X, Y = strip_box(k4_slopes, (1, 3, 1), 60)
    pairs = [(c, d) for c, d in ((-14, 1), (0, 1), (8, 5))]
    for x in range(-80, 81):
        for y in range(-80, 81):
            if norm(pairs, (1, 3, 1), x, y) <= 60:
                assert abs(x) <= X and abs(y) <= Y


def test_minimal_norm_against_naive_scan():
    rng = random.Random(20261016)
    for _ in range(40):
        m = rng.randint(1, 4)
        pool = {Slope(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(m)}
        sys = SlopeSystem(sorted(pool))
        pairs = [(s.num, s.den) for s in sys]
        coeffs = [rng.randint(0, 4) for _ in sys]
        if not any(coeffs):
            coeffs[0] = 1
        assert minimal_positive_norm(sys, coeffs) == naive_min_norm(pairs, coeffs, 40)


slope_st = st.builds(
    Slope, st.integers(-8, 8), st.integers(1, 6)
)
system_st = st.lists(slope_st, min_size=1, max_size=4, unique=True).map(SlopeSystem)


@st.composite
def system_and_coeffs(draw):
    sys = draw(system_st)
    coeffs = draw(st.lists(st.integers(0, 4), min_size=len(sys), max_size=len(sys)))
    if not any(coeffs):
        coeffs[0] = 1
    return sys, coeffs


cls_st = st.builds(PeripheralClass, st.integers(-30, 30), st.integers(-30, 30))


@given(system_and_coeffs(), cls_st, cls_st, st.integers(-5, 5))
def test_seminorm_axioms(sc, g, h, k):
    sys, coeffs = sc
    v = evaluate(sys, coeffs, g)
    assert v >= 0 and v % 2 == 0
    assert evaluate(sys, coeffs, g.scale(k)) == abs(k) * v
    assert evaluate(sys, coeffs, g + h) <= v + evaluate(sys, coeffs, h)


@settings(max_examples=60)
@given(system_and_coeffs())
def test_minimum_bounded_by_meridian(sc):
    sys, coeffs = sc
    s = minimal_positive_norm(sys, coeffs)
    assert s % 2 == 0 and s > 0
    mu = evaluate(sys, coeffs, MERIDIAN)
    if mu > 0:
        assert s <= mu


@given(system_and_coeffs(), cls_st)
def test_kernel_characterizes_kind(sc, g):
    sys, coeffs = sc
    c = classify(sys, coeffs)
    v = evaluate(sys, coeffs, g)
    if c.is_norm_curve:
        assert (v == 0) == (g == (0, 0))
    else:
        r = class_of(c.r_slope)
        parallel = g.x * r.y - g.y * r.x == 0
        assert (v == 0) == parallel
        # on an r-curve the seminorm is s * Delta(g, r)
        j = list(sys).index(c.r_slope)
        assert v == 2 * coeffs[j] * abs(g.x * r.y - g.y * r.x)
