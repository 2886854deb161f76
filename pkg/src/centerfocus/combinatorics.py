"""Combinatorial identities behind the focal-value closed forms.

* Low coefficients of ``(1 + y + ... + y**(n-1) + tail)**n``.
* The lambda table: a two-index recurrence and its binomial closed form.
* Fourier lines of ``Pbar**(2k) * P`` for ``P = A cos t + B sin t`` and
  ``Pbar = A sin t - B cos t``, by a mode recurrence, together with the
  mu ratios that factor each line through the diagonal modes.

Everything is exact (ints and Fractions).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Sequence

from .trig_algebra import TrigPoly, trig_pow

__all__ = [
    "generating_series_coeff",
    "lambda_coeff",
    "lambda_closed",
    "lambda_coeff_for_degree",
    "lambda_closed_for_degree",
    "LambdaTable",
    "lambda_table",
    "MuTable",
    "mu_table",
    "FourierLine",
    "harmonic_expansion",
    "direct_expansion",
]


def _truncated_mul(x: Sequence, y: Sequence, deg: int) -> list:
    out = [0] * (deg + 1)
    for i, a in enumerate(x[: deg + 1]):
        if not a:
            continue
        for j, b in enumerate(y[: deg + 1 - i]):
            out[i + j] += a * b
    return out


def generating_series_coeff(n: int, k: int, tail: Sequence = ()) -> int:
    """Coefficient of ``y**k`` in ``(1 + y + ... + y**(n-1) + tail)**n``.

    ``tail`` holds the coefficients of ``y**n, y**(n+1), ...``; they cannot
    influence degrees below ``n``.  Computed by truncated powering.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must satisfy 0 <= k <= n-1, got k={k}, n={n}")
    # ints below degree n keep the powering in integer arithmetic
    phi = [1] * n + [Fraction(t) for t in tail]
    result = [1]
    base = phi[: k + 1]
    e = n
    while e:
        if e & 1:
            result = _truncated_mul(result, base, k)
        e >>= 1
        if e:
            base = _truncated_mul(base, base, k)
    value = Fraction(result[k]) if k < len(result) else Fraction(0)
    if value.denominator != 1:
        raise ArithmeticError("non-integral series coefficient")
    return int(value)


@dataclass(frozen=True)
class LambdaTable:
    """Rows ``lambda_k^j`` (``0 <= j <= k <= kmax``) for leading order ``n``.

    ``n = 2m + 1`` reproduces the odd-degree table indexed by ``m``.
    """

    n: int
    kmax: int
    entries: dict = field(repr=False)

    def __getitem__(self, kj: tuple[int, int]) -> Fraction:
        return self.entries[kj]


@lru_cache(maxsize=64)
def _lambda_rows(n: int, kmax: int) -> LambdaTable:
    lam: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for k in range(1, kmax + 1):
        for j in range(k):
            s = sum(lam[(i, j)] for i in range(j, k))
            lam[(k, j)] = Fraction(2, k - j) * s
        lam[(k, k)] = comb(n + k, k) - sum(lam[(k, j)] for j in range(k))
    return LambdaTable(n, kmax, lam)


def lambda_table(n: int, kmax: int) -> LambdaTable:
    """Lambda table from the recurrence, for ``a_{n+1+k}`` with leading order ``n``."""
    if n < 1 or kmax < 0:
        raise ValueError("need n >= 1 and kmax >= 0")
    return _lambda_rows(n, kmax)


def _check_kj(k: int, j: int) -> None:
    if k < 0 or j < 0 or j > k:
        raise ValueError(f"need 0 <= j <= k, got k={k}, j={j}")


def lambda_coeff_for_degree(k: int, j: int, n: int) -> Fraction:
    _check_kj(k, j)
    # Tables are memoized by (n, kmax); round kmax up so nearby calls share one.
    kmax = (k // 16 + 1) * 16
    return _lambda_rows(n, kmax)[(k, j)]


def lambda_closed_for_degree(k: int, j: int, n: int) -> Fraction:
    """``(k - j + 1) * C(n + j - 2, j)``."""
    _check_kj(k, j)
    return Fraction((k - j + 1) * comb(n + j - 2, j))


def lambda_coeff(k: int, j: int, m: int) -> Fraction:
    """``lambda_k^j`` by the defining recurrence, odd degree ``2m + 1``.

    >>> lambda_coeff(1, 1, 2)
    Fraction(4, 1)
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    return lambda_coeff_for_degree(k, j, 2 * m + 1)


def lambda_closed(k: int, j: int, m: int) -> Fraction:
    """``(k - j + 1) * C(2m + j - 1, j)``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return lambda_closed_for_degree(k, j, 2 * m + 1)


def _nondegenerate(A1, B1) -> tuple[Fraction, Fraction]:
    A1, B1 = Fraction(A1), Fraction(B1)
    if not (A1 or B1):
        raise ValueError("A1 and B1 must not both vanish")
    return A1, B1


@dataclass(frozen=True)
class MuTable:
    """Ratios ``mu[(2k+1, 2j+1)]`` for odd orders up to ``2K+1``.

    Missing keys follow the conventions ``mu_i^i = 1`` and ``mu_i^j = 0``
    for ``j > i``; use :meth:`get`.
    """

    A1: Fraction
    B1: Fraction
    lambda_const: Fraction
    K: int
    entries: dict = field(repr=False)

    def get(self, i: int, j: int) -> Fraction:
        if j > i:
            return Fraction(0)
        if j == i:
            return Fraction(1)
        return self.entries[(i, j)]


def mu_table(K: int, A1, B1) -> MuTable:
    A1, B1 = _nondegenerate(A1, B1)
    if K < 1:
        raise ValueError("K must be >= 1")
    lam = (A1 * A1 + B1 * B1) / 2
    lam2 = lam * lam
    mu: dict[tuple[int, int], Fraction] = {(3, 1): lam / 2}

    def get(i, j):
        if j > i:
            return Fraction(0)
        if j == i:
            return Fraction(1)
        if j == -1:
            # boundary convention for the j = 0 step
            return -mu[(i, 1)] * mu[(3, 1)]
        return mu[(i, j)]

    for k in range(2, K + 1):
        o, p = 2 * k + 1, 2 * k - 1
        for j in range(k):
            mu[(o, 2 * j + 1)] = Fraction(2 * k - 1, 2) * (
                Fraction(2, 2 * j - 1) * get(p, 2 * j - 1)
                - lam2 / (2 * (2 * j + 3)) * get(p, 2 * j + 3)
            )
    return MuTable(A1, B1, lam, K, mu)


@dataclass(frozen=True)
class FourierLine:
    """Odd-harmonic expansion of ``Pbar**(2k) * P``: ``{2j+1: (A, B)}``."""

    order: int
    modes: dict

    def as_trig(self) -> TrigPoly:
        return TrigPoly(self.modes)


def harmonic_expansion(k: int, A1, B1) -> FourierLine:
    """Fourier line of ``Pbar**(2k) * P`` via the mode recurrence.

    Each step multiplies the previous line by ``Pbar**2``; with
    ``P * Pbar = A2 cos 2t + B2 sin 2t`` the new modes come from the two
    neighbouring modes of the previous line.  The boundary cases (lowest
    mode, the two highest modes) are handled separately.
    """
    A1, B1 = _nondegenerate(A1, B1)
    if k < 0:
        raise ValueError("k must be >= 0")
    A2 = -A1 * B1
    B2 = (A1 * A1 - B1 * B1) / 2
    line = {1: (A1, B1)}
    zero = (Fraction(0), Fraction(0))
    for kk in range(1, k + 1):
        prev = line
        f = Fraction(2 * kk - 1, 2)
        new = {}
        for j in range(kk + 1):
            lo = prev.get(2 * j - 1, zero)
            hi = prev.get(2 * j + 3, zero)
            if j == kk:
                a = (-A2 * lo[1] - B2 * lo[0]) / 2
                b = (A2 * lo[0] - B2 * lo[1]) / 2
            elif j == 0:
                a1, b1 = prev[1]
                a = f * (-A2 * b1 + B2 * a1 + (-A2 * hi[1] + B2 * hi[0]) / 3)
                b = f * (-A2 * a1 - B2 * b1 + (A2 * hi[0] + B2 * hi[1]) / 3)
            elif j == kk - 1:
                g = f / (2 * kk - 3)
                a = g * (-A2 * lo[1] - B2 * lo[0])
                b = g * (A2 * lo[0] - B2 * lo[1])
            else:
                c_lo = Fraction(1, 2 * j - 1)
                c_hi = Fraction(1, 2 * j + 3)
                a = f * (c_lo * (-A2 * lo[1] - B2 * lo[0]) + c_hi * (-A2 * hi[1] + B2 * hi[0]))
                b = f * (c_lo * (A2 * lo[0] - B2 * lo[1]) + c_hi * (A2 * hi[0] + B2 * hi[1]))
            new[2 * j + 1] = (a, b)
        line = new
    return FourierLine(2 * k + 1, line)


def direct_expansion(k: int, A1, B1) -> FourierLine:
    """Same line as :func:`harmonic_expansion`, by brute-force products."""
    A1, B1 = Fraction(A1), Fraction(B1)
    P = TrigPoly({1: (A1, B1)})
    Pbar = TrigPoly({1: (-B1, A1)})
    f = trig_pow(Pbar, 2 * k) * P
    modes = {j: f.coefficient(j) for j in range(1, 2 * k + 2, 2)}
    return FourierLine(2 * k + 1, modes)
