import random
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from abelbelyi.arith import GF, QQ
from abelbelyi.pade import (
    CubicCurve,
    DegeneratePade,
    abel_candidate,
    is_abel,
    pade_approx,
    series_inverse,
    series_sqrt,
    torsion_order,
)
from abelbelyi.upoly import UniPoly

X = UniPoly.x(QQ)


def P(*cs, field=QQ):
    return UniPoly(cs, field)


def example_curve(k):
    return CubicCurve(2 * k, k * k, -4)


def test_series_sqrt_examples():
    assert series_sqrt(P(1, 0, 0, -4), 4) == P(1, 0, 0, -2)
    assert series_sqrt(P(1, 2, 1, -4), 2) == P(1, 1)
    assert series_sqrt(P(1), 7) == P(1)
    with pytest.raises(ValueError):
        series_sqrt(P(2, 1), 3)


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=4), st.integers(0, 12))
def test_series_sqrt_squares_back(tail, m):
    f = P(1, *tail)
    s = series_sqrt(f, m)
    assert s.coeff(0) == 1
    assert (s * s).truncate(m + 1) == f.truncate(m + 1)


def test_series_inverse():
    s = P(1, 3, -2)
    assert (s * series_inverse(s, 8)).truncate(8) == P(1)


def test_pade_examples():
    p, q = pade_approx(series_sqrt(P(1, 2, 1, -4), 1), 1, 0)
    assert (p, q) == (P(1, 1), P(1))
    p, q = pade_approx(P(1, 1, 1, 1, 1), 0, 1)
    assert (p, q) == (P(1), P(1, -1))
    p, q = pade_approx(P(1, 1, Fraction(1, 2), Fraction(1, 6)), 1, 1)
    assert (p, q) == (P(1, Fraction(1, 2)), P(1, Fraction(-1, 2)))


def test_pade_degenerate():
    # [1/1] of 1 + 0x + x^2: the 1x1 system 0 * q1 = -1 is singular
    with pytest.raises(DegeneratePade):
        pade_approx(P(1, 0, 1), 1, 1)


def test_curve_validation():
    with pytest.raises(ValueError):
        CubicCurve(1, 1, 0)
    # 1 - 3x^2 + 2x^3 = (1 - x)^2 (1 + 2x)
    with pytest.raises(ValueError):
        CubicCurve(0, -3, 2)


@pytest.mark.parametrize("k", range(7))
def test_abel_example_family(k):
    curve = example_curve(k)
    cand = abel_candidate(curve, 3)
    assert cand.norm == P(0, 0, 0, 4)
    assert cand.x_c == 0 and cand.is_abel
    assert cand.p == P(1, k) and cand.q == P(1)
    assert torsion_order(curve, 10).order == 3


def test_not_abel_examples():
    assert not is_abel(CubicCurve(1, 1, 1), 3)
    assert not is_abel(example_curve(1), 4)
    cand = abel_candidate(CubicCurve(1, 1, 1), 5)
    assert cand.norm.valuation() >= 4 and cand.x_c


def test_torsion_none_for_generic_curve():
    res = torsion_order(CubicCurve(1, 1, 1), 14)
    assert res.order is None


def test_torsion_rejects_small_bound():
    with pytest.raises(ValueError):
        torsion_order(CubicCurve(1, 1, 1), 2)


def test_n_domain():
    with pytest.raises(ValueError):
        abel_candidate(CubicCurve(1, 1, 1), 2)
    with pytest.raises(ValueError):
        abel_candidate(CubicCurve(1, 1, 1, GF(5)), 5)


def random_curves(count, seed):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        a, b, c = (Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(3))
        try:
            out.append(CubicCurve(a, b, c))
        except ValueError:
            continue
    return out


def test_divisor_shape_random_curves():
    for curve in random_curves(40, 1):
        for n in range(3, 11):
            try:
                cand = abel_candidate(curve, n)
            except DegeneratePade:
                continue
            assert cand.norm.valuation() >= n - 1 and cand.norm.degree <= n
            assert cand.p.coeff(0) == 1 and cand.q.coeff(0) == 1
            assert cand.p.degree <= n // 2 and cand.q.degree <= (n - 3) // 2
            M, N = n // 2, (n - 3) // 2
            s = series_sqrt(curve.f, M + N)
            assert (cand.p - s * cand.q).truncate(M + N + 1).is_zero()


@pytest.mark.parametrize("u", [2, 3])
def test_scaling_invariance(u):
    curves = random_curves(10, u) + [example_curve(2)]
    for curve in curves:
        scaled = CubicCurve(u * curve.a, u * u * curve.b, u**3 * curve.c)
        for n in range(3, 9):
            try:
                assert is_abel(scaled, n) == is_abel(curve, n)
            except DegeneratePade:
                continue


def test_over_fp():
    with pytest.raises(ValueError):
        CubicCurve(2, 1, -4, GF(7))  # discriminant of f vanishes mod 7
    F = GF(11)
    curve = CubicCurve(2, 1, -4, F)
    assert abel_candidate(curve, 3).norm == P(0, 0, 0, 4, field=F)
    res = torsion_order(curve, 10)
    assert res.order == 3


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(-20, 20))
def test_x_c_matches_norm(a, b, c):
    assume(c)
    try:
        curve = CubicCurve(a, b, c)
        cand = abel_candidate(curve, 5)
    except (ValueError, DegeneratePade):
        return
    c4, c5 = cand.norm.coeff(4), cand.norm.coeff(5)
    if c5:
        assert cand.x_c == -c4 / c5
    else:
        assert cand.x_c is None and not cand.is_abel
    d = cand.to_dict()
    assert d["is_abel"] == cand.is_abel
