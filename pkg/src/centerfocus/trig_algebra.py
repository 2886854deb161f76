"""Exact algebra of trigonometric polynomials on the unit circle.

Three value types live here:

``TrigPoly``
    A finite Fourier series ``c0 + sum_j (a_j cos(j t) + b_j sin(j t))``
    with :class:`fractions.Fraction` coefficients.
``PolyTrig``
    A finite sum ``sum_m t**m * f_m(t)`` with each ``f_m`` a ``TrigPoly``.
    Closed under products and under integration from 0.
``PiPolynomial``
    A polynomial in pi with rational coefficients.  Integrals over a full
    period and evaluations at ``t = 2*pi`` land here, so zero tests stay
    exact.

All objects are immutable once built.  Multiplication uses the
product-to-sum identities on sparse harmonic maps.
"""

from __future__ import annotations

import math
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

import numpy as np

RationalLike = Union[int, Fraction]

_HALF = Fraction(1, 2)
_ZERO = Fraction(0)

# Raw harmonic maps: j -> (cos_coeff, sin_coeff); j == 0 holds the constant
# with a zero sine slot.
_Raw = dict


def _frac(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


def _clean(raw: Mapping[int, tuple]) -> dict:
    out = {}
    for j, (a, b) in raw.items():
        if j == 0:
            b = _ZERO
        if a or b:
            out[j] = (a, b)
    return out


def _mul_raw(x: Mapping, y: Mapping) -> dict:
    # Accumulates twice the product so the halving happens once per key.
    acc = defaultdict(lambda: [_ZERO, _ZERO])
    for i, (a1, b1) in x.items():
        for j, (a2, b2) in y.items():
            if i == 0 or j == 0:
                c = a1 if i == 0 else a2
                k, (a, b) = (j, (a2, b2)) if i == 0 else (i, (a1, b1))
                slot = acc[k]
                slot[0] += 2 * c * a
                slot[1] += 2 * c * b
                continue
            cc = a1 * a2
            ss = b1 * b2
            sc = b1 * a2
            cs = a1 * b2
            s = acc[i + j]
            s[0] += cc - ss
            s[1] += sc + cs
            d = i - j
            if d == 0:
                acc[0][0] += cc + ss
            else:
                slot = acc[abs(d)]
                slot[0] += cc + ss
                slot[1] += (sc - cs) if d > 0 else (cs - sc)
    return _clean({k: (v[0] * _HALF, v[1] * _HALF) for k, v in acc.items()})


def _add_raw(x: Mapping, y: Mapping, sign: int = 1) -> dict:
    out = dict(x)
    for j, (a, b) in y.items():
        if j in out:
            a0, b0 = out[j]
            out[j] = (a0 + sign * a, b0 + sign * b)
        else:
            out[j] = (sign * a, sign * b)
    return _clean(out)


def _scale_raw(x: Mapping, s: Fraction) -> dict:
    if not s:
        return {}
    return {j: (a * s, b * s) for j, (a, b) in x.items()}


class TrigPoly:
    """Finite Fourier series with exact rational coefficients.

    >>> TrigPoly.cos(1) * TrigPoly.sin(1)
    TrigPoly(1/2 sin(2t))
    """

    __slots__ = ("_h",)

    def __init__(self, harmonics: Mapping[int, tuple] | None = None, constant: RationalLike = 0):
        raw = {}
        if constant:
            raw[0] = (_frac(constant), _ZERO)
        for j, (a, b) in (harmonics or {}).items():
            if j < 0 or (j == 0 and raw):
                raise ValueError(f"invalid harmonic index {j}")
            raw[int(j)] = (_frac(a), _frac(b))
        self._h = _clean(raw)

    @classmethod
    def _from_raw(cls, raw: dict) -> "TrigPoly":
        obj = cls.__new__(cls)
        obj._h = raw
        return obj

    @classmethod
    def const(cls, c: RationalLike) -> "TrigPoly":
        return cls(constant=c)

    @classmethod
    def cos(cls, j: int, coeff: RationalLike = 1) -> "TrigPoly":
        if j == 0:
            return cls(constant=coeff)
        return cls({j: (coeff, 0)})

    @classmethod
    def sin(cls, j: int, coeff: RationalLike = 1) -> "TrigPoly":
        if j == 0:
            return cls()
        return cls({j: (0, coeff)})

    @property
    def constant_term(self) -> Fraction:
        return self._h.get(0, (_ZERO, _ZERO))[0]

    @property
    def harmonics(self) -> dict[int, tuple[Fraction, Fraction]]:
        """Nonzero harmonics ``j >= 1`` as ``{j: (cos_coeff, sin_coeff)}``."""
        return {j: v for j, v in self._h.items() if j > 0}

    @property
    def degree(self) -> int:
        return max(self._h, default=0)

    def coefficient(self, j: int) -> tuple[Fraction, Fraction]:
        return self._h.get(j, (_ZERO, _ZERO))

    def is_zero(self) -> bool:
        return not self._h

    def __bool__(self) -> bool:
        return bool(self._h)

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyTrig):
            return other == self
        if isinstance(other, (int, Fraction)):
            other = TrigPoly.const(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return self._h == other._h

    def __hash__(self) -> int:
        return hash(frozenset(self._h.items()))

    def __neg__(self) -> "TrigPoly":
        return TrigPoly._from_raw(_scale_raw(self._h, Fraction(-1)))

    def __add__(self, other) -> "TrigPoly":
        if isinstance(other, PolyTrig):
            return PolyTrig.embed(self) + other
        if isinstance(other, (int, Fraction)):
            other = TrigPoly.const(other)
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return TrigPoly._from_raw(_add_raw(self._h, other._h))

    __radd__ = __add__

    def __sub__(self, other) -> "TrigPoly":
        return self + (-other)

    def __rsub__(self, other) -> "TrigPoly":
        return (-self) + other

    def __mul__(self, other) -> "TrigPoly":
        if isinstance(other, (int, Fraction)):
            return TrigPoly._from_raw(_scale_raw(self._h, _frac(other)))
        if isinstance(other, PolyTrig):
            return PolyTrig.embed(self) * other
        if not isinstance(other, TrigPoly):
            return NotImplemented
        return TrigPoly._from_raw(_mul_raw(self._h, other._h))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TrigPoly":
        return trig_pow(self, k)

    def __call__(self, theta):
        """Evaluate in floating point (scalar or array ``theta``)."""
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for j, (a, b) in self._h.items():
            if j == 0:
                out = out + float(a)
            else:
                out = out + float(a) * np.cos(j * theta) + float(b) * np.sin(j * theta)
        return out if out.ndim else float(out)

    def float_harmonics(self) -> tuple[float, list[tuple[int, float, float]]]:
        """Constant and ``(j, a, b)`` triples as floats, for fast sampling."""
        return float(self.constant_term), [
            (j, float(a), float(b)) for j, (a, b) in sorted(self.harmonics.items())
        ]

    def __repr__(self) -> str:
        return f"TrigPoly({_format_raw(self._h)})"


def _format_raw(raw: Mapping) -> str:
    if not raw:
        return "0"
    parts = []
    for j in sorted(raw):
        a, b = raw[j]
        if j == 0:
            parts.append(str(a))
            continue
        if a:
            parts.append(f"{a} cos({j}t)" if j > 1 else f"{a} cos(t)")
        if b:
            parts.append(f"{b} sin({j}t)" if j > 1 else f"{b} sin(t)")
    return " + ".join(parts)


class PolyTrig:
    """``sum_m t**m * f_m(t)`` with each ``f_m`` a :class:`TrigPoly`.

    Only nonzero parts are stored.  A ``PolyTrig`` whose sole part is
    ``m = 0`` compares equal to that ``TrigPoly``.
    """

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[int, TrigPoly] | None = None):
        t = {}
        for m, f in (terms or {}).items():
            if m < 0:
                raise ValueError("theta powers must be nonnegative")
            if not isinstance(f, TrigPoly):
                f = TrigPoly.const(f)
            if f:
                t[int(m)] = f
        self._t = t

    @classmethod
    def embed(cls, f: Union[TrigPoly, RationalLike]) -> "PolyTrig":
        return cls({0: f})

    @classmethod
    def theta(cls, power: int = 1) -> "PolyTrig":
        return cls({power: TrigPoly.const(1)})

    @property
    def terms(self) -> dict[int, TrigPoly]:
        return dict(self._t)

    @property
    def theta_degree(self) -> int:
        return max(self._t, default=0)

    @property
    def degree(self) -> int:
        return max((f.degree for f in self._t.values()), default=0)

    def part(self, m: int) -> TrigPoly:
        return self._t.get(m, TrigPoly())

    def is_zero(self) -> bool:
        return not self._t

    def is_periodic(self) -> bool:
        return self.theta_degree == 0

    def as_trig(self) -> TrigPoly:
        if not self.is_periodic():
            raise ValueError("PolyTrig has secular (theta-power) terms")
        return self.part(0)

    def __bool__(self) -> bool:
        return bool(self._t)

    def _coerce(self, other) -> "PolyTrig | None":
        if isinstance(other, PolyTrig):
            return other
        if isinstance(other, TrigPoly):
            return PolyTrig.embed(other)
        if isinstance(other, (int, Fraction)):
            return PolyTrig.embed(TrigPoly.const(other))
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._t == other._t

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __neg__(self) -> "PolyTrig":
        return PolyTrig({m: -f for m, f in self._t.items()})

    def __add__(self, other) -> "PolyTrig":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._t)
        for m, f in other._t.items():
            out[m] = out[m] + f if m in out else f
        return PolyTrig(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PolyTrig":
        return self + (-other)

    def __rsub__(self, other) -> "PolyTrig":
        return (-self) + other

    def __mul__(self, other) -> "PolyTrig":
        if isinstance(other, (int, Fraction)):
            return PolyTrig({m: f * other for m, f in self._t.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[int, dict] = {}
        for m1, f1 in self._t.items():
            for m2, f2 in other._t.items():
                prod = _mul_raw(f1._h, f2._h)
                m = m1 + m2
                acc[m] = _add_raw(acc[m], prod) if m in acc else prod
        return PolyTrig({m: TrigPoly._from_raw(r) for m, r in acc.items()})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "PolyTrig":
        return trig_pow(self, k)

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        out = np.zeros_like(theta)
        for m, f in self._t.items():
            out = out + theta**m * f(theta)
        return out if out.ndim else float(out)

    def __repr__(self) -> str:
        if not self._t:
            return "PolyTrig(0)"
        parts = []
        for m in sorted(self._t):
            body = _format_raw(self._t[m]._h)
            parts.append(body if m == 0 else f"t^{m}*({body})")
        return f"PolyTrig({' + '.join(parts)})"


class PiPolynomial:
    """Polynomial in pi with rational coefficients, ``{power: coeff}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, RationalLike] | None = None):
        self._c = {int(p): _frac(c) for p, c in (coeffs or {}).items() if c}

    @property
    def coeffs(self) -> dict[int, Fraction]:
        return dict(self._c)

    def coefficient(self, power: int) -> Fraction:
        return self._c.get(power, _ZERO)

    @property
    def degree(self) -> int:
        return max(self._c, default=0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PiPolynomial({0: other})
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __neg__(self) -> "PiPolynomial":
        return PiPolynomial({p: -c for p, c in self._c.items()})

    def __add__(self, other) -> "PiPolynomial":
        if isinstance(other, (int, Fraction)):
            other = PiPolynomial({0: other})
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        out = dict(self._c)
        for p, c in other._c.items():
            out[p] = out.get(p, _ZERO) + c
        return PiPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "PiPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "PiPolynomial":
        if isinstance(other, (int, Fraction)):
            return PiPolynomial({p: c * other for p, c in self._c.items()})
        if not isinstance(other, PiPolynomial):
            return NotImplemented
        out: dict[int, Fraction] = defaultdict(Fraction)
        for p1, c1 in self._c.items():
            for p2, c2 in other._c.items():
                out[p1 + p2] += c1 * c2
        return PiPolynomial(out)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(sum(float(c) * math.pi**p for p, c in self._c.items()))

    def sign(self) -> int:
        """Sign of the real number this polynomial denotes."""
        if not self._c:
            return 0
        # Pure monomials (the common case) are decided exactly.
        if len(self._c) == 1:
            (c,) = self._c.values()
            return 1 if c > 0 else -1
        v = float(self)
        return (v > 0) - (v < 0)

    def to_pairs(self) -> list[list]:
        """Lossless ``[["num/den", power], ...]`` rendering, ascending power."""
        return [[str(self._c[p]), p] for p in sorted(self._c)]

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "PiPolynomial":
        return cls({int(p): Fraction(c) for c, p in pairs})

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for p in sorted(self._c):
            c = self._c[p]
            if p == 0:
                parts.append(str(c))
            elif p == 1:
                parts.append(f"{c}·π")
            else:
                parts.append(f"{c}·π^{p}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PiPolynomial({self})"


class HomogPoly:
    """Homogeneous polynomial ``sum_{i+j=k} p_ij x^i y^j``."""

    __slots__ = ("degree", "_c")

    def __init__(self, degree: int, coeffs: Mapping[tuple[int, int], RationalLike] | None = None):
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        c = {}
        for (i, j), v in (coeffs or {}).items():
            if i < 0 or j < 0 or i + j != degree:
                raise ValueError(f"monomial x^{i} y^{j} does not have degree {degree}")
            v = _frac(v)
            if v:
                c[(int(i), int(j))] = v
        self.degree = int(degree)
        self._c = c

    @property
    def coeffs(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._c)

    def coeff(self, i: int, j: int) -> Fraction:
        return self._c.get((i, j), _ZERO)

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogPoly):
            return NotImplemented
        return self.degree == other.degree and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.degree, frozenset(self._c.items())))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if self.degree != other.degree:
            raise ValueError("cannot add homogeneous polynomials of different degree")
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, _ZERO) + v
        return HomogPoly(self.degree, out)

    def __neg__(self) -> "HomogPoly":
        return HomogPoly(self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "HomogPoly") -> "HomogPoly":
        return self + (-other)

    def __mul__(self, other) -> "HomogPoly":
        if isinstance(other, (int, Fraction)):
            return HomogPoly(self.degree, {k: v * other for k, v in self._c.items()})
        if not isinstance(other, HomogPoly):
            return NotImplemented
        out: dict = defaultdict(Fraction)
        for (i1, j1), v1 in self._c.items():
            for (i2, j2), v2 in other._c.items():
                out[(i1 + i2, j1 + j2)] += v1 * v2
        return HomogPoly(self.degree + other.degree, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "HomogPoly":
        out = HomogPoly(0, {(0, 0): 1})
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x, y):
        return sum(float(v) * x**i * y**j for (i, j), v in self._c.items())

    def __repr__(self) -> str:
        if not self._c:
            return f"HomogPoly({self.degree}, 0)"
        terms = " + ".join(f"{v}*x^{i}*y^{j}" for (i, j), v in sorted(self._c.items(), reverse=True))
        return f"HomogPoly({self.degree}, {terms})"


def trig_mul(a: TrigPoly, b: TrigPoly) -> TrigPoly:
    """Product of two trigonometric polynomials (product-to-sum)."""
    return a * b


def trig_pow(f, k: int):
    """``f**k`` by binary powering; ``f**0`` is the constant 1."""
    if k < 0:
        raise ValueError("exponent must be nonnegative")
    one = TrigPoly.const(1) if isinstance(f, TrigPoly) else PolyTrig.embed(1)
    result, base = one, f
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


@lru_cache(maxsize=None)
def _cos_pow(i: int) -> TrigPoly:
    return TrigPoly.const(1) if i == 0 else _cos_pow(i - 1) * TrigPoly.cos(1)


@lru_cache(maxsize=None)
def _sin_pow(j: int) -> TrigPoly:
    return TrigPoly.const(1) if j == 0 else _sin_pow(j - 1) * TrigPoly.sin(1)


def circle_restriction(h: HomogPoly) -> TrigPoly:
    """Substitute ``x = cos t``, ``y = sin t`` and expand into Fourier form."""
    out = TrigPoly()
    for (i, j), v in h.coeffs.items():
        out = out + (_cos_pow(i) * _sin_pow(j)) * v
    return out


def _integrate_raw(m: int, raw: Mapping) -> dict[int, dict]:
    """Indefinite integral of ``t**m * raw`` (no constant fixed)."""
    out: dict[int, dict] = defaultdict(dict)

    def put(p, j, a, b):
        slot = out[p]
        a0, b0 = slot.get(j, (_ZERO, _ZERO))
        slot[j] = (a0 + a, b0 + b)

    for j, (a, b) in raw.items():
        if j == 0:
            put(m + 1, 0, a / (m + 1), _ZERO)
            continue
        # int t^p (a cos + b sin) = t^p (a sin - b cos)/j - (p/j) int t^(p-1) (a sin - b cos)
        f = Fraction(1)
        p = m
        while p >= 0 and (a or b):
            put(p, j, -f * b / j, f * a / j)
            f = -f * p / j
            a, b = -b, a
            p -= 1
    return out


def antiderivative_from_zero(f) -> PolyTrig:
    """Primitive ``F`` with ``F' = f`` and ``F(0) = 0``."""
    if isinstance(f, TrigPoly):
        f = PolyTrig.embed(f)
    acc: dict[int, dict] = {}
    for m, part in f.terms.items():
        for p, raw in _integrate_raw(m, part._h).items():
            acc[p] = _add_raw(acc[p], raw) if p in acc else _clean(raw)
    base = acc.get(0, {})
    at_zero = sum((a for a, _ in base.values()), _ZERO)
    if at_zero:
        acc[0] = _add_raw(base, {0: (at_zero, _ZERO)}, sign=-1)
    return PolyTrig({p: TrigPoly._from_raw(r) for p, r in acc.items()})


def period_integral(f: TrigPoly) -> PiPolynomial:
    """Exact ``int_0^{2 pi} f dt`` = ``2 pi * constant_term``."""
    if isinstance(f, PolyTrig):
        f = f.as_trig()
    return PiPolynomial({1: 2 * f.constant_term})


def eval_full_period(f) -> PiPolynomial:
    """Exact value at ``t = 2 pi`` (``cos(2 pi j) = 1``, ``sin(2 pi j) = 0``)."""
    if isinstance(f, TrigPoly):
        f = PolyTrig.embed(f)
    out = {}
    for m, part in f.terms.items():
        s = sum((a for a, _ in part._h.values()), _ZERO)
        if s:
            out[m] = s * 2**m
    return PiPolynomial(out)


def eval_at_zero(f) -> Fraction:
    if isinstance(f, TrigPoly):
        f = PolyTrig.embed(f)
    return sum((a for a, _ in f.part(0)._h.values()), _ZERO)
