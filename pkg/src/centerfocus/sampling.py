"""Random test systems: generic foci, centers built by composition, slices.

Coefficients are small rationals so that radii up to 0.1 stay well inside
the basin where the return map is defined: ``1/r`` starts at ``1/c`` and
moves by ``int_0^t P1`` (at most ``|B| + sqrt(A^2 + B^2)``) plus a term of
order ``c**(n-1)``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import linalg
from .center_conditions import SystemSpec, corollary_rows, monomials
from .trig_algebra import HomogPoly

__all__ = [
    "random_rational",
    "random_p1",
    "random_system",
    "composition_center",
    "slice_system",
    "center_powers",
    "mixed_sample",
]


def random_rational(rng: random.Random, bound=2, den: int = 1000, nonzero: bool = False) -> Fraction:
    """Uniform on the grid ``k/den`` with ``|k/den| <= bound``.

    A fine grid keeps samples generic: on a coarse one, accidental zeros of
    the first center condition are common (a few percent of draws) and turn
    an ordinary focus into a high-order one.
    """
    top = int(Fraction(bound) * den)
    while True:
        v = Fraction(rng.randint(-top, top), den)
        if v or not nonzero:
            return v


def random_p1(rng: random.Random, bound=2, den: int = 1000) -> tuple[Fraction, Fraction]:
    """Random nonzero linear part."""
    while True:
        a, b = random_rational(rng, bound, den), random_rational(rng, bound, den)
        if a or b:
            return a, b


def random_system(rng: random.Random, n: int, bound=2, den: int = 1000) -> SystemSpec:
    """Every coefficient independent; a focus with probability one."""
    a, b = random_p1(rng, bound, den)
    pn = {m: random_rational(rng, bound, den) for m in monomials(n)}
    return SystemSpec.from_coeffs(n, a, b, pn)


def center_powers(n: int) -> range:
    """Powers ``p`` of ``Pbar`` allowed in a composition center of degree ``n``."""
    return range(0 if n % 2 else 1, n, 2)


def composition_center(
    rng: random.Random,
    n: int,
    p1: tuple | None = None,
    bound=1,
    den: int = 1000,
) -> SystemSpec:
    """``Pn = P1 * sum_p c_p * Pbar**p * (x^2 + y^2)**((n-1-p)/2)``.

    On the unit circle ``Pbar = p10 y - p01 x`` and ``x^2 + y^2 = 1``, so this
    is ``P1 * h(Pbar)``: a center by construction.
    """
    a, b = (Fraction(v) for v in p1) if p1 is not None else random_p1(rng)
    lin = HomogPoly(1, {(1, 0): a, (0, 1): b})
    bar = HomogPoly(1, {(0, 1): a, (1, 0): -b})
    rho = HomogPoly(2, {(2, 0): 1, (0, 2): 1})
    pn = HomogPoly(n)
    for p in center_powers(n):
        c = random_rational(rng, bound, den)
        if c:
            pn = pn + lin * bar**p * rho ** ((n - 1 - p) // 2) * c
    return SystemSpec(n, a, b, pn)


def slice_system(
    rng: random.Random,
    n: int,
    p1: tuple,
    zero_count: int,
    bound=1,
    den: int = 1000,
) -> SystemSpec:
    """Random ``Pn`` on which the first ``zero_count`` corollary polynomials vanish."""
    rows = corollary_rows(n, *p1)[:zero_count]
    basis = linalg.nullspace(rows, n + 1)
    coeffs = [Fraction(0)] * (n + 1)
    for vec in basis:
        w = random_rational(rng, bound, den)
        coeffs = [c + w * v for c, v in zip(coeffs, vec)]
    return SystemSpec.from_coeffs(n, p1[0], p1[1], dict(zip(monomials(n), coeffs)))


def mixed_sample(rng: random.Random, n: int, count: int) -> list[SystemSpec]:
    """Alternating generic foci and composition centers."""
    out = []
    for i in range(count):
        out.append(composition_center(rng, n) if i % 2 else random_system(rng, n))
    return out
