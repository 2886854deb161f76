"""Floating-point Poincare return map for ``r' = P1 r**2 + Pn r**(n+1)``.

This is an independent check on the exact results: it integrates the
equation from ``t = 0`` to ``2 pi`` with an adaptive embedded Runge-Kutta
pair and compares ``r(2 pi)`` with ``r(0)``.

Two formulations are available.  ``"direct"`` integrates ``r`` itself.
``"reciprocal"`` (the default) integrates

    v = 1/r - 1/c + Pt(t),   v' = -Pn r**(n-1),   v(0) = 0,

where ``Pt = int_0^t P1`` is known in closed form.  Since ``Pt(2 pi) = 0``,
``Pi(c) = 1/(1/c + v(2 pi))``.  The residual ``Pi(c) - c`` then carries
relative rather than absolute accuracy, which the focal-value fits need:
at ``c = 0.02`` a fifth-order residual is ~1e-9 and the direct form only
resolves it to about six digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.integrate import DOP853

from .center_conditions import SystemSpec

__all__ = [
    "IntegratorConfig",
    "ReturnMapSample",
    "OracleError",
    "StepBudgetExceeded",
    "NonFinite",
    "IllConditioned",
    "return_map",
    "estimate_focal",
    "verify_center_numeric",
    "default_ladder",
]

TWO_PI = 2.0 * math.pi
MAX_RADIUS = 0.2


class OracleError(RuntimeError):
    pass


class StepBudgetExceeded(OracleError):
    pass


class NonFinite(OracleError):
    pass


class IllConditioned(OracleError):
    pass


@dataclass(frozen=True)
class IntegratorConfig:
    """Tolerances and step budget for the DOP853 (8th order, 5/3 embedded) pair."""

    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_steps: int = 200_000
    method: str = "DOP853"
    formulation: str = "reciprocal"
    cond_limit: float = 1e10

    def __post_init__(self):
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise ValueError("tolerances must be positive")
        if self.max_steps < 1:
            raise ValueError("max_steps must be positive")
        if self.method != "DOP853":
            raise ValueError(f"unsupported method {self.method!r}")
        if self.formulation not in ("reciprocal", "direct"):
            raise ValueError(f"unknown formulation {self.formulation!r}")


@dataclass(frozen=True)
class ReturnMapSample:
    c: float
    r_end: float
    residual: float
    steps: int = 0


def _pn_eval(sys: SystemSpec):
    c0, harm = sys.Pn_trig.float_harmonics()
    js = np.array([h[0] for h in harm], dtype=float)
    ca = np.array([h[1] for h in harm])
    cb = np.array([h[2] for h in harm])

    def pn(t):
        jt = js * t
        return c0 + float(ca @ np.cos(jt) + cb @ np.sin(jt))

    return pn


def _direct_rhs(sys: SystemSpec):
    a1, b1 = float(sys.p10), float(sys.p01)
    pn = _pn_eval(sys)
    e = sys.n - 1

    def f(t, y):
        r = y[0]
        p1 = a1 * math.cos(t) + b1 * math.sin(t)
        return np.array([r * r * (p1 + pn(t) * r**e)])

    return f


def _reciprocal_rhs(sys: SystemSpec, c: float):
    a1, b1 = float(sys.p10), float(sys.p01)
    pn = _pn_eval(sys)
    e = sys.n - 1
    inv_c = 1.0 / c

    def f(t, y):
        pt = a1 * math.sin(t) - b1 * math.cos(t) + b1
        denom = inv_c - pt + y[0]
        # 1/r reaching zero means r passed through infinity; v alone would not show it
        if not denom > 0:
            raise NonFinite(f"solution escaped to infinity near t={t:.6g} (c={c})")
        r = 1.0 / denom
        return np.array([-pn(t) * r**e])

    return f


def return_map(sys: SystemSpec, c: float, cfg: IntegratorConfig | None = None) -> ReturnMapSample:
    """Integrate over one period starting from ``r(0) = c``."""
    cfg = cfg or IntegratorConfig()
    if not 0 <= c <= MAX_RADIUS:
        raise ValueError(f"initial radius must lie in [0, {MAX_RADIUS}], got {c}")
    if c == 0:
        return ReturnMapSample(0.0, 0.0, 0.0)
    c = float(c)
    if cfg.formulation == "direct":
        fun, y0, atol = _direct_rhs(sys), c, cfg.abs_tol
    else:
        # v is O(c**(n-1)); scaling atol the same way keeps the error relative
        fun, y0, atol = _reciprocal_rhs(sys, c), 0.0, cfg.abs_tol * c ** (sys.n - 1)
    solver = DOP853(fun, 0.0, np.array([y0]), TWO_PI, rtol=cfg.rel_tol, atol=atol)
    steps = 0
    while solver.status == "running":
        if steps >= cfg.max_steps:
            raise StepBudgetExceeded(f"no convergence within {cfg.max_steps} steps (c={c})")
        msg = solver.step()
        steps += 1
        if solver.status == "failed":
            raise StepBudgetExceeded(f"integrator failed at t={solver.t:.6g}: {msg}")
        if not np.all(np.isfinite(solver.y)):
            raise NonFinite(f"solution blew up near t={solver.t:.6g} (c={c})")
    y = float(solver.y[0])
    if cfg.formulation == "direct":
        return ReturnMapSample(c, y, y - c, steps)
    residual = -c * c * y / (1.0 + c * y)
    r_end = 1.0 / (1.0 / c + y)
    if not math.isfinite(r_end) or r_end <= 0:
        raise NonFinite(f"solution left the basin (c={c})")
    return ReturnMapSample(c, r_end, residual, steps)


def default_ladder(points: int = 10, lo: float = 0.02, hi: float = 0.1) -> list[float]:
    """Geometric ladder, denser at small radii."""
    return [float(v) for v in np.geomspace(lo, hi, points)]


def estimate_focal(
    sys: SystemSpec,
    max_order: int,
    ladder: Sequence[float] | None = None,
    cfg: IntegratorConfig | None = None,
    fit_order: int | None = None,
) -> list[float]:
    """Least-squares fit ``Pi(c) - c ~ sum_{k=2}^{max_order} V_k c**k``.

    Returns ``[V_2, ..., V_max_order]``.  The fit itself runs through
    ``c**fit_order`` (default ``len(ladder)``) so that the orders just above
    ``max_order`` do not leak into the reported ones; a 4-term fit on
    [0.02, 0.1] otherwise biases the fifth coefficient by ~4%.

    Rows are weighted by ``c**-(n+1)``: roundoff in the reciprocal variable
    is proportional to its size, ``O(c**(n-1))``, so the residual noise grows
    like ``c**(n+1)`` and this is the inverse-standard-deviation weight.
    Columns are scaled by the largest radius, and the condition number of
    the scaled, weighted design matrix is checked against ``cfg.cond_limit``.
    """
    cfg = cfg or IntegratorConfig()
    if max_order < 2:
        raise ValueError("max_order must be >= 2")
    ladder = default_ladder() if ladder is None else list(ladder)
    if len(ladder) < max_order + 2:
        raise ValueError(f"ladder needs at least {max_order + 2} radii")
    if any(b <= a for a, b in zip(ladder, ladder[1:])):
        raise ValueError("ladder must be strictly increasing")
    if ladder[0] <= 0:
        raise ValueError("ladder radii must be positive")
    fit_order = len(ladder) if fit_order is None else fit_order
    if not max_order <= fit_order <= len(ladder) + 1:
        raise ValueError("fit_order must lie between max_order and len(ladder) + 1")
    cs = np.asarray(ladder, dtype=float)
    res = np.array([return_map(sys, c, cfg).residual for c in cs])
    scale = cs[-1]
    orders = np.arange(2, fit_order + 1)
    weights = (cs / scale) ** -(sys.n + 1)
    X = (cs[:, None] / scale) ** orders[None, :] * weights[:, None]
    cond = np.linalg.cond(X)
    if not np.isfinite(cond) or cond > cfg.cond_limit:
        raise IllConditioned(f"fit condition number {cond:.3g} exceeds {cfg.cond_limit:.3g}")
    coef, *_ = np.linalg.lstsq(X, res * weights, rcond=None)
    coef = coef / scale**orders
    return [float(v) for v in coef[: max_order - 1]]


def verify_center_numeric(
    sys: SystemSpec,
    cs: Sequence[float] = (0.02, 0.05, 0.1),
    tol: float = 1e-9,
    cfg: IntegratorConfig | None = None,
) -> bool:
    """True iff ``|Pi(c) - c| <= tol`` for every ``c`` in ``cs``."""
    if not cs:
        raise ValueError("need at least one radius")
    return max(abs(return_map(sys, c, cfg).residual) for c in cs) <= tol
