"""Return-map series ``r(t, c) = sum_k a_k(t) c**k`` and focal values.

Substituting the series into ``r' = P1 r**2 + Pn r**(n+1)`` and matching
powers of ``c`` gives ``a_1 = 1`` and, for ``k >= 2``,

    a_k' = P1 * sum_{i+j=k} a_i a_j + Pn * [c**(k-n-1)] phi**(n+1),

with ``phi = sum_m a_m c**(m-1)`` and ``a_k(0) = 0``.  The focal values are
``V_k = a_k(2 pi)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .center_conditions import SystemSpec
from .combinatorics import lambda_table
from .trig_algebra import (
    PiPolynomial,
    PolyTrig,
    antiderivative_from_zero,
    eval_full_period,
    period_integral,
    trig_pow,
)

__all__ = [
    "SeriesTable",
    "FocalReport",
    "series_coefficients",
    "focal_values",
    "closed_form_series",
    "closed_form_check",
    "default_order",
]


def default_order(n: int) -> int:
    return 2 * n + 2


@dataclass(frozen=True)
class SeriesTable:
    sys: SystemSpec
    K: int
    terms: tuple[PolyTrig, ...]

    def a(self, k: int) -> PolyTrig:
        """``a_k`` (1-based, ``1 <= k <= K``)."""
        if not 1 <= k <= self.K:
            raise IndexError(f"a_{k} outside 1..{self.K}")
        return self.terms[k - 1]


@dataclass(frozen=True)
class FocalReport:
    values: dict[int, PiPolynomial]
    first_nonzero: Optional[int]


def series_coefficients(sys: SystemSpec, K: int) -> SeriesTable:
    if K < 1:
        raise ValueError("K must be >= 1")
    n = sys.n
    P1 = PolyTrig.embed(sys.P1)
    Pn = PolyTrig.embed(sys.Pn_trig)
    a: list[PolyTrig] = [PolyTrig.embed(1)]
    # powers[p][d] = [c**d] phi**(p+1), filled one degree at a time
    powers: list[list[PolyTrig]] = [[] for _ in range(n + 1)]

    def extend_powers(d: int) -> None:
        powers[0].append(a[d])
        for p in range(1, n + 1):
            acc = PolyTrig()
            for i in range(d + 1):
                acc = acc + a[i] * powers[p - 1][d - i]
            powers[p].append(acc)

    for k in range(2, K + 1):
        quad = PolyTrig()
        for i in range(1, (k - 1) // 2 + 1):
            quad = quad + a[i - 1] * a[k - i - 1]
        quad = quad * 2
        if k % 2 == 0:
            half = a[k // 2 - 1]
            quad = quad + half * half
        rhs = P1 * quad
        d = k - n - 1
        if d >= 0:
            extend_powers(d)
            rhs = rhs + Pn * powers[n][d]
        a.append(antiderivative_from_zero(rhs))
    return SeriesTable(sys, K, tuple(a))


def focal_values(sys: SystemSpec, K: int | None = None) -> FocalReport:
    """``V_k = a_k(2 pi)`` for ``k = 2..K`` (default ``K = 2n + 2``)."""
    K = default_order(sys.n) if K is None else K
    if K < 2:
        raise ValueError("K must be >= 2")
    table = series_coefficients(sys, K)
    values = {k: eval_full_period(table.a(k)) for k in range(2, K + 1)}
    first = next((k for k, v in values.items() if v), None)
    return FocalReport(values, first)


def _check_k(sys: SystemSpec, k: int) -> None:
    if not 0 <= k <= sys.n:
        raise ValueError(f"k must satisfy 0 <= k <= n={sys.n}, got {k}")


def closed_form_series(sys: SystemSpec, k: int, square_term: bool = True) -> PolyTrig:
    """Closed form of ``a_{n+1+k}`` for ``0 <= k <= n``.

        Pt**(n+k) + sum_j lam[k, j] * Pt**(k-j) * int_0^t Pt**j Pn

    with ``Pt = int_0^t P1``.  At ``k = n`` the series coefficient picks up
    ``(n+1)/2 * (int_0^t Pn)**2`` as well, from the first ``Pn``-dependent
    coefficient of ``phi``; ``square_term=False`` leaves it out, which gives
    the bare binomial sum.
    """
    _check_k(sys, k)
    n = sys.n
    Pt = PolyTrig.embed(sys.P1_tilde)
    lam = lambda_table(n, k)
    out = trig_pow(Pt, n + k)
    inner = sys.Pn_trig
    for j in range(k + 1):
        out = out + trig_pow(Pt, k - j) * antiderivative_from_zero(inner) * lam[(k, j)]
        inner = inner * sys.P1_tilde
    if k == n and square_term:
        out = out + sys.Pn_bar * sys.Pn_bar * Fraction(n + 1, 2)
    return out


def closed_form_check(
    sys: SystemSpec, k: int, square_term: bool = True
) -> tuple[PiPolynomial, PiPolynomial]:
    """``(a_{n+1+k}(2 pi)`` from the recurrence, value from the closed form``)``.

    Only the ``j = k`` term of the closed form survives at ``2 pi`` because
    ``Pt(2 pi) = 0``, leaving ``lam[k, k] * int_0^{2 pi} Pt**k Pn``, plus
    ``(n+1)/2 * M_0**2`` at ``k = n`` unless ``square_term`` is false.
    """
    _check_k(sys, k)
    n = sys.n
    table = series_coefficients(sys, n + 1 + k)
    recurrence_value = eval_full_period(table.a(n + 1 + k))
    lam_kk = lambda_table(n, k)[(k, k)]
    closed_value = period_integral(trig_pow(sys.P1_tilde, k) * sys.Pn_trig) * lam_kk
    if k == n and square_term:
        m0 = period_integral(sys.Pn_trig)
        closed_value = closed_value + m0 * m0 * Fraction(n + 1, 2)
    return recurrence_value, closed_value
