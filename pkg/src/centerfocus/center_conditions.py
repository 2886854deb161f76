"""Center/focus decision for ``r' = r (P1 r + Pn r**n)`` via exact moments.

The origin is a center exactly when every moment

    M_j = int_0^{2 pi} Pbar**j * Pn dt,   j = 0..n,

vanishes, where ``P1 = A cos t + B sin t`` and ``Pbar = A sin t - B cos t``.
When it does, ``Pn = P1 * h(Pbar)`` for a polynomial ``h`` whose powers all
share the parity of ``n - 1``; :func:`composition_factor` recovers ``h``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from . import linalg
from .trig_algebra import (
    HomogPoly,
    PiPolynomial,
    PolyTrig,
    TrigPoly,
    antiderivative_from_zero,
    circle_restriction,
    period_integral,
    trig_pow,
)

__all__ = [
    "SystemSpec",
    "MomentReport",
    "VerdictKind",
    "Verdict",
    "CompositionFactor",
    "moments",
    "is_center",
    "corollary_conditions",
    "corollary_rows",
    "moment_rows",
    "tilde_moments",
    "monomials",
    "composition_factor",
    "composition_basis",
]


@dataclass(frozen=True)
class SystemSpec:
    """``x' = -y + x (P1 + Pn)``, ``y' = x + y (P1 + Pn)``.

    ``P1 = p10 x + p01 y`` and ``Pn`` is homogeneous of degree ``n``.
    """

    n: int
    p10: Fraction
    p01: Fraction
    Pn: HomogPoly

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError("n must be an integer >= 2")
        object.__setattr__(self, "p10", Fraction(self.p10))
        object.__setattr__(self, "p01", Fraction(self.p01))
        if self.Pn.degree != self.n:
            raise ValueError(f"Pn has degree {self.Pn.degree}, expected {self.n}")

    @classmethod
    def from_coeffs(cls, n: int, p10, p01, pn: dict) -> "SystemSpec":
        return cls(n, Fraction(p10), Fraction(p01), HomogPoly(n, pn))

    @property
    def A1(self) -> Fraction:
        return self.p10

    @property
    def B1(self) -> Fraction:
        return self.p01

    @property
    def degenerate(self) -> bool:
        return not (self.p10 or self.p01)

    def p(self, i: int, j: int) -> Fraction:
        if i + j == 1:
            return self.p10 if i == 1 else self.p01
        return self.Pn.coeff(i, j)

    @cached_property
    def P1(self) -> TrigPoly:
        return TrigPoly({1: (self.p10, self.p01)})

    @cached_property
    def P1_bar(self) -> TrigPoly:
        return TrigPoly({1: (-self.p01, self.p10)})

    @cached_property
    def P1_tilde(self) -> TrigPoly:
        """``int_0^t P1 = Pbar + B``; periodic and zero at both ends."""
        return self.P1_bar + self.p01

    @cached_property
    def Pn_trig(self) -> TrigPoly:
        return circle_restriction(self.Pn)

    @cached_property
    def Pn_bar(self) -> PolyTrig:
        """``int_0^t Pn``."""
        return antiderivative_from_zero(self.Pn_trig)


@dataclass(frozen=True)
class MomentReport:
    moments: tuple[PiPolynomial, ...]
    first_nonzero: Optional[int]


class VerdictKind(enum.Enum):
    CENTER = "Center"
    FOCUS = "Focus"


@dataclass(frozen=True)
class Verdict:
    kind: VerdictKind
    first_nonzero_moment_index: Optional[int] = None
    moment_value: Optional[PiPolynomial] = None

    @property
    def is_center(self) -> bool:
        return self.kind is VerdictKind.CENTER

    def __str__(self) -> str:
        if self.is_center:
            return "Center"
        return f"Focus (first nonzero moment j={self.first_nonzero_moment_index})"


@dataclass(frozen=True)
class CompositionFactor:
    """``Pn = P1 * sum_k coeffs[k] * Pbar**powers[k]`` on the unit circle."""

    powers: tuple[int, ...]
    coeffs: tuple[Fraction, ...]
    residual: TrigPoly = field(default_factory=TrigPoly)

    def polynomial(self, sys: SystemSpec) -> TrigPoly:
        out = TrigPoly()
        for p, c in zip(self.powers, self.coeffs):
            out = out + sys.P1 * trig_pow(sys.P1_bar, p) * c
        return out


def _moment_list(sys: SystemSpec, weight: TrigPoly) -> list[PiPolynomial]:
    out = []
    acc = sys.Pn_trig
    for _ in range(sys.n + 1):
        out.append(period_integral(acc))
        acc = acc * weight
    return out


def moments(sys: SystemSpec) -> MomentReport:
    """``M_j = int_0^{2 pi} Pbar**j Pn`` for ``j = 0..n``."""
    ms = tuple(_moment_list(sys, sys.P1_bar))
    first = next((j for j, m in enumerate(ms) if m), None)
    return MomentReport(ms, first)


def tilde_moments(sys: SystemSpec) -> list[PiPolynomial]:
    """``int_0^{2 pi} Ptilde**j Pn`` for ``j = 0..n``."""
    return _moment_list(sys, sys.P1_tilde)


def is_center(sys: SystemSpec) -> Verdict:
    if sys.degenerate:
        # r' = Pn r^(n+1) is separable: periodic iff int Pn = 0.
        m0 = period_integral(sys.Pn_trig)
        if m0:
            return Verdict(VerdictKind.FOCUS, 0, m0)
        return Verdict(VerdictKind.CENTER)
    rep = moments(sys)
    if rep.first_nonzero is None:
        return Verdict(VerdictKind.CENTER)
    j = rep.first_nonzero
    return Verdict(VerdictKind.FOCUS, j, rep.moments[j])


def _corollary_polys(n: int, p) -> list[Fraction]:
    a, b = p(1, 0), p(0, 1)
    if n == 2:
        return [
            p(2, 0) + p(0, 2),
            p(2, 0) * (b**2 - a**2) - p(1, 1) * a * b,
        ]
    if n == 3:
        return [
            a * p(2, 1) - b * p(1, 2) + 3 * a * p(0, 3) - 3 * b * p(3, 0),
            p(3, 0) * b**3 - p(2, 1) * b**2 * a + p(1, 2) * b * a**2 - p(0, 3) * a**3,
        ]
    if n == 4:
        return [
            3 * (p(4, 0) + p(0, 4)) + p(2, 2),
            (a**2 - b**2) * (p(0, 4) - p(4, 0)) - a * b * (p(3, 1) + p(1, 3)),
            p(4, 0) * b**4 - p(3, 1) * b**3 * a + p(2, 2) * b**2 * a**2
            - p(1, 3) * b * a**3 + p(0, 4) * a**4,
        ]
    if n == 5:
        return [
            b * (5 * p(5, 0) + p(3, 2) + p(1, 4)) - a * (5 * p(0, 5) + p(2, 3) + p(4, 1)),
            a**3 * (p(2, 3) + 10 * p(0, 5))
            - 3 * a**2 * b * (2 * p(1, 4) + p(3, 2))
            + 3 * a * b**2 * (p(2, 3) + 2 * p(4, 1))
            - b**3 * (p(3, 2) + 10 * p(5, 0)),
            p(5, 0) * b**5 - p(4, 1) * b**4 * a + p(3, 2) * b**3 * a**2
            - p(2, 3) * b**2 * a**3 + p(1, 4) * b * a**4 - p(0, 5) * a**5,
        ]
    if n == 6:
        return [
            5 * (p(6, 0) + p(0, 6)) + p(4, 2) + p(2, 4),
            a**2 * (p(2, 4) - 5 * p(6, 0) + 10 * p(0, 6))
            - a * b * (5 * p(5, 1) + 5 * p(1, 5) + 3 * p(3, 3))
            + b**2 * (p(4, 2) - 5 * p(0, 6) + 10 * p(6, 0)),
            a**4 * (p(2, 4) - 3 * p(6, 0) + 12 * p(0, 6))
            - a**3 * b * (3 * p(5, 1) + 7 * p(1, 5) + 3 * p(3, 3))
            - 12 * a**2 * b**2 * (p(6, 0) + p(0, 6))
            - a * b**3 * (3 * p(1, 5) + 7 * p(5, 1) + 3 * p(3, 3))
            + b**4 * (p(4, 2) - 3 * p(0, 6) + 12 * p(6, 0)),
            p(6, 0) * b**6 - p(5, 1) * b**5 * a + p(4, 2) * b**4 * a**2
            - p(3, 3) * b**3 * a**3 + p(2, 4) * b**2 * a**4
            - p(1, 5) * b * a**5 + p(0, 6) * a**6,
        ]
    raise ValueError(f"corollary conditions are tabulated for 2 <= n <= 6, got n={n}")


def corollary_conditions(sys: SystemSpec) -> list[Fraction]:
    """The ``n//2 + 1`` tabulated center polynomials evaluated at ``sys``.

    All of them vanish exactly when the origin is a center.
    """
    if not 2 <= sys.n <= 6:
        raise ValueError(f"corollary conditions are tabulated for 2 <= n <= 6, got n={sys.n}")
    return _corollary_polys(sys.n, sys.p)


def monomials(n: int) -> list[tuple[int, int]]:
    return [(n - j, j) for j in range(n + 1)]


def corollary_rows(n: int, p10, p01) -> list[list[Fraction]]:
    """Each corollary polynomial as a linear form in the ``Pn`` coefficients.

    The polynomials are linear in ``p_ij`` (``i + j = n``) once ``P1`` is
    fixed, so row ``r`` column ``c`` is polynomial ``r`` at the unit vector
    of monomial ``monomials(n)[c]``.
    """
    cols = []
    for mono in monomials(n):
        sys = SystemSpec.from_coeffs(n, p10, p01, {mono: 1})
        cols.append(corollary_conditions(sys))
    return [list(r) for r in zip(*cols)]


def moment_rows(n: int, p10, p01) -> list[list[PiPolynomial]]:
    """Moments ``M_j`` as linear forms in the ``Pn`` coefficients."""
    cols = []
    for mono in monomials(n):
        sys = SystemSpec.from_coeffs(n, p10, p01, {mono: 1})
        cols.append(moments(sys).moments)
    return [list(r) for r in zip(*cols)]


def composition_basis(sys: SystemSpec) -> tuple[tuple[int, ...], list[TrigPoly]]:
    """Powers of ``Pbar`` allowed in the factor and the products ``P1 * Pbar**p``.

    Odd ``n``: even powers ``0, 2, ..., n-1``.  Even ``n``: odd powers
    ``1, 3, ..., n-1``.
    """
    start = 0 if sys.n % 2 else 1
    powers = tuple(range(start, sys.n, 2))
    basis = []
    acc = trig_pow(sys.P1_bar, start) * sys.P1
    sq = sys.P1_bar * sys.P1_bar
    for _ in powers:
        basis.append(acc)
        acc = acc * sq
    return powers, basis


def _fourier_vector(f: TrigPoly, top: int) -> list[Fraction]:
    vec = [f.constant_term]
    for j in range(1, top + 1):
        vec.extend(f.coefficient(j))
    return vec


def composition_factor(sys: SystemSpec) -> Optional[CompositionFactor]:
    """Exact solve of ``Pn = P1 * sum_k c_k Pbar**p_k`` on the circle.

    Returns ``None`` when no such factorization exists.
    """
    if sys.degenerate:
        raise ValueError("composition factor needs P1 != 0")
    powers, basis = composition_basis(sys)
    top = sys.n + 1
    target = _fourier_vector(sys.Pn_trig, top)
    cols = [_fourier_vector(f, top) for f in basis]
    rows = [[c[i] for c in cols] for i in range(len(target))]
    sol = linalg.solve(rows, target)
    if sol is None:
        return None
    fac = CompositionFactor(powers, tuple(sol))
    residual = sys.Pn_trig - fac.polynomial(sys)
    return CompositionFactor(powers, tuple(sol), residual)
