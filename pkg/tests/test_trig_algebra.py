import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.integrate import quad

from centerfocus.trig_algebra import (
    HomogPoly,
    PiPolynomial,
    PolyTrig,
    TrigPoly,
    antiderivative_from_zero,
    circle_restriction,
    eval_at_zero,
    eval_full_period,
    period_integral,
    trig_mul,
    trig_pow,
)
from conftest import poly_trigs, rationals, trig_polys

C, S = TrigPoly.cos, TrigPoly.sin


def test_double_angle_products():
    assert trig_mul(C(1), S(1)) == S(2, F(1, 2))
    assert trig_mul(C(1), C(1)) == TrigPoly.const(F(1, 2)) + C(2, F(1, 2))


@given(rationals, rationals)
def test_linear_times_conjugate(a, b):
    p = TrigPoly({1: (a, b)})
    pbar = TrigPoly({1: (-b, a)})
    assert trig_mul(p, pbar) == TrigPoly({2: (-a * b, (a * a - b * b) / 2)})


def test_circle_restriction_examples():
    assert circle_restriction(HomogPoly(2, {(2, 0): 1, (0, 2): -1})) == C(2)
    assert circle_restriction(HomogPoly(2, {(1, 1): 1})) == S(2, F(1, 2))
    assert circle_restriction(HomogPoly(3, {(3, 0): 1})) == C(1, F(3, 4)) + C(3, F(1, 4))


def test_homogpoly_rejects_wrong_degree():
    with pytest.raises(ValueError):
        HomogPoly(2, {(3, 0): 1})


def test_antiderivative_examples():
    assert antiderivative_from_zero(C(1)) == PolyTrig.embed(S(1))
    a, b = F(2, 3), F(-5, 7)
    p1 = TrigPoly({1: (a, b)})
    expected = TrigPoly({1: (-b, a)}, b)
    assert antiderivative_from_zero(p1) == PolyTrig.embed(expected)
    assert antiderivative_from_zero(TrigPoly.const(1)) == PolyTrig.theta(1)


def test_period_integral_examples():
    assert period_integral(C(2)).is_zero()
    assert period_integral(S(1) * S(1)) == PiPolynomial({1: 1})
    assert period_integral(TrigPoly.const(3)) == PiPolynomial({1: 6})


def test_eval_full_period_examples():
    a, b = F(3), F(-2)
    pbar = TrigPoly({1: (-b, a)})
    assert eval_full_period(pbar) == PiPolynomial({0: -b})
    assert eval_full_period(pbar + b).is_zero()
    assert eval_full_period(PolyTrig.theta(1) * PolyTrig.embed(C(1))) == PiPolynomial({1: 2})


def test_trig_pow_examples():
    assert trig_pow(S(1), 2) == TrigPoly.const(F(1, 2)) - C(2, F(1, 2))
    assert trig_pow(S(1) + C(3), 0) == TrigPoly.const(1)
    s4 = trig_pow(S(1), 4)
    assert s4 == TrigPoly.const(F(3, 8)) - C(2, F(1, 2)) + C(4, F(1, 8))
    t = np.linspace(0, 2 * math.pi, 17)
    assert np.allclose(s4(t), np.sin(t) ** 4, atol=1e-14)


def test_trig_pow_rejects_negative():
    with pytest.raises(ValueError):
        trig_pow(S(1), -1)


def test_no_zero_harmonics_stored():
    f = C(1) + S(2) - C(1)
    assert set(f.harmonics) == {2}
    assert f.degree == 2


@given(trig_polys(), trig_polys(), trig_polys())
def test_trig_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert (f * g).degree <= f.degree + g.degree


@given(poly_trigs(), poly_trigs(), poly_trigs())
def test_polytrig_ring_axioms(f, g, h):
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f


@given(trig_polys(), trig_polys())
def test_product_is_pointwise(f, g):
    t = np.linspace(0, 2 * math.pi, 23)
    assert np.allclose((f * g)(t), f(t) * g(t), atol=1e-9)


@given(poly_trigs(), st.integers(0, 2**31 - 1))
def test_antiderivative_differentiates_back(f, seed):
    big = antiderivative_from_zero(f)
    assert eval_at_zero(big) == 0
    t = np.random.default_rng(seed).uniform(0.1, 2 * math.pi, 20)
    h = 1e-3
    # five-point stencil: truncation O(h**4), roundoff O(eps * |F| / h)
    deriv = (big(t - 2 * h) - 8 * big(t - h) + 8 * big(t + h) - big(t + 2 * h)) / (12 * h)
    scale = max(1.0, float(np.max(np.abs(big(t)))), float(np.max(np.abs(f(t)))))
    assert np.max(np.abs(deriv - f(t))) <= 1e-9 * scale


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
@given(trig_polys(3), trig_polys(3))
def test_period_integral_matches_quadrature(f, g):
    exact = float(period_integral(f * g))
    num, _ = quad(lambda t: float(f(t) * g(t)), 0, 2 * math.pi, limit=200, epsabs=1e-12)
    assert abs(exact - num) <= 1e-9


@given(trig_polys())
def test_full_period_of_antiderivative_is_period_integral(f):
    assert eval_full_period(antiderivative_from_zero(f)) == period_integral(f)


@given(st.integers(1, 7), st.data())
def test_circle_restriction_parity(k, data):
    h = HomogPoly(k, {(k - j, j): data.draw(rationals) for j in range(k + 1)})
    f = circle_restriction(h)
    assert f.degree <= k
    assert all(j % 2 == k % 2 for j in f.harmonics)
    if k % 2:
        assert f.constant_term == 0


@given(st.integers(1, 5), st.data())
def test_circle_restriction_pointwise(k, data):
    h = HomogPoly(k, {(k - j, j): data.draw(rationals) for j in range(k + 1)})
    t = np.linspace(0, 2 * math.pi, 11)
    assert np.allclose(circle_restriction(h)(t), [h(math.cos(x), math.sin(x)) for x in t], atol=1e-12)


def test_embedding_is_lossless():
    f = C(3, F(1, 7)) + S(1, 2) + 5
    g = PolyTrig.embed(f)
    assert g.is_periodic() and g.as_trig() == f


def test_pi_polynomial_roundtrip_and_sign():
    p = PiPolynomial({0: F(22, 7), 1: -1})
    assert PiPolynomial.from_pairs(p.to_pairs()) == p
    assert p.sign() == 1  # 22/7 > pi
    assert PiPolynomial({0: F(355, 113), 1: -1}).sign() == 1
    assert PiPolynomial({0: 3, 1: -1}).sign() == -1
    assert str(PiPolynomial({1: F(-3, 2)})) == "-3/2·π"
    assert PiPolynomial().is_zero() and str(PiPolynomial()) == "0"
