import random
from fractions import Fraction as F

import pytest

from centerfocus.center_conditions import SystemSpec, is_center, moments, tilde_moments
from centerfocus.combinatorics import lambda_table
from centerfocus.focal_values import (
    closed_form_check,
    closed_form_series,
    default_order,
    focal_values,
    series_coefficients,
)
from centerfocus.sampling import composition_center, random_p1, random_system, slice_system
from centerfocus.trig_algebra import PiPolynomial, PolyTrig, eval_at_zero, trig_pow

PI = PiPolynomial({1: 1})


def _mixed(rng, n, count):
    out = []
    for i in range(count):
        kind = i % 3
        if kind == 0:
            out.append(random_system(rng, n))
        elif kind == 1:
            out.append(composition_center(rng, n))
        else:
            # all but the last corollary polynomial vanish: a late focus
            out.append(slice_system(rng, n, random_p1(rng), n // 2))
    return out


def test_first_coefficients(focus_example):
    tab = series_coefficients(focus_example, 3)
    assert tab.a(1) == PolyTrig.embed(1)
    for k in (2, 3):
        assert eval_at_zero(tab.a(k)) == 0
    with pytest.raises(IndexError):
        tab.a(4)
    with pytest.raises(ValueError):
        series_coefficients(focus_example, 0)


@pytest.mark.parametrize("n", range(2, 8))
def test_low_coefficients_are_powers_of_primitive(n):
    rng = random.Random(n)
    for _ in range(3):
        sys = random_system(rng, n)
        tab = series_coefficients(sys, n + 1)
        pt = PolyTrig.embed(sys.P1_tilde)
        for k in range(2, n + 1):
            assert tab.a(k) == trig_pow(pt, k - 1)
        assert tab.a(n + 1) == trig_pow(pt, n) + sys.Pn_bar


def test_center_example_focal_values_vanish(center_example):
    rep = focal_values(center_example, 7)
    assert all(v.is_zero() for v in rep.values.values())
    assert rep.first_nonzero is None


def test_focus_example_focal_values(focus_example):
    # derived by the recurrence and independently by a sympy series and ODE integration
    rep = focal_values(focus_example, 7)
    assert [rep.values[k] for k in (2, 3, 4)] == [PiPolynomial()] * 3
    assert rep.values[5] == PI * F(-1, 2)
    assert rep.first_nonzero == 5
    assert closed_form_check(focus_example, 2) == (PI * F(-1, 2), PI * F(-1, 2))


def test_zero_nonlinearity():
    for n in range(2, 6):
        sys = SystemSpec.from_coeffs(n, F(1, 3), -2, {})
        assert all(v.is_zero() for v in focal_values(sys).values.values())
        for k in range(n + 1):
            r, c = closed_form_check(sys, k)
            assert r.is_zero() and c.is_zero()


def test_default_order():
    assert default_order(3) == 8
    sys = SystemSpec.from_coeffs(3, 1, 0, {(3, 0): 1})
    assert max(focal_values(sys).values) == 8


def test_closed_form_rejects_k_above_n(focus_example):
    with pytest.raises(ValueError):
        closed_form_check(focus_example, 3)
    with pytest.raises(ValueError):
        closed_form_series(focus_example, -1)


@pytest.mark.parametrize("n", range(2, 6))
def test_closed_form_full_function(n):
    rng = random.Random(20 + n)
    for sys in _mixed(rng, n, 6):
        tab = series_coefficients(sys, 2 * n + 1)
        for k in range(n + 1):
            assert tab.a(n + 1 + k) == closed_form_series(sys, k)


@pytest.mark.parametrize("n", range(2, 6))
def test_bare_binomial_sum_misses_square_term_only_at_top(n):
    rng = random.Random(30 + n)
    for sys in _mixed(rng, n, 4):
        tab = series_coefficients(sys, 2 * n + 1)
        for k in range(n):
            assert closed_form_series(sys, k, square_term=False) == closed_form_series(sys, k)
        gap = tab.a(2 * n + 1) - closed_form_series(sys, n, square_term=False)
        assert gap == sys.Pn_bar * sys.Pn_bar * F(n + 1, 2)


@pytest.mark.parametrize("n", range(2, 7))
def test_closed_form_values_at_full_period(n):
    rng = random.Random(40 + n)
    for sys in _mixed(rng, n, 4):
        for k in range(n + 1):
            r, c = closed_form_check(sys, k)
            assert r == c


def test_closed_form_check_odd_center():
    rng = random.Random(7)
    sys = composition_center(rng, 3)
    for k in (1, 3):
        r, c = closed_form_check(sys, k)
        assert r == c


@pytest.mark.parametrize("n", range(2, 7))
def test_first_focal_value_is_scaled_tilde_moment(n):
    rng = random.Random(50 + n)
    for sys in _mixed(rng, n, 12):
        rep = focal_values(sys)
        verdict = is_center(sys)
        assert (rep.first_nonzero is None) == verdict.is_center
        if verdict.is_center:
            continue
        tm = tilde_moments(sys)
        j = next(i for i, m in enumerate(tm) if m)
        assert j == verdict.first_nonzero_moment_index
        assert rep.first_nonzero == n + 1 + j
        assert rep.values[n + 1 + j] == tm[j] * lambda_table(n, j)[(j, j)]


@pytest.mark.parametrize("n", range(2, 7))
def test_window_vanishes_iff_moments_vanish(n):
    rng = random.Random(60 + n)
    for sys in _mixed(rng, n, 50):
        window_zero = all(v.is_zero() for v in focal_values(sys).values.values())
        moments_zero = all(m.is_zero() for m in moments(sys).moments)
        assert window_zero == moments_zero


@pytest.mark.parametrize("n", range(2, 6))
def test_center_coefficients_are_periodic(n):
    rng = random.Random(70 + n)
    for _ in range(3):
        tab = series_coefficients(composition_center(rng, n), 2 * n + 2)
        assert all(tab.a(k).theta_degree == 0 for k in range(1, tab.K + 1))
