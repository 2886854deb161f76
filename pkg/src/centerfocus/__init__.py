"""Exact center/focus analysis for rigid planar systems

    x' = -y + x (P1 + Pn),   y' = x + y (P1 + Pn),

with ``P1`` linear and ``Pn`` homogeneous of degree ``n``, plus a
floating-point return-map oracle to cross-check the exact answers.
"""

from .center_conditions import (
    CompositionFactor,
    MomentReport,
    SystemSpec,
    Verdict,
    VerdictKind,
    composition_factor,
    corollary_conditions,
    is_center,
    moments,
)
from .focal_values import closed_form_check, closed_form_series, focal_values, series_coefficients
from .numeric_oracle import IntegratorConfig, estimate_focal, return_map, verify_center_numeric
from .trig_algebra import HomogPoly, PiPolynomial, PolyTrig, TrigPoly

__all__ = [
    "CompositionFactor",
    "HomogPoly",
    "IntegratorConfig",
    "MomentReport",
    "PiPolynomial",
    "PolyTrig",
    "SystemSpec",
    "TrigPoly",
    "Verdict",
    "VerdictKind",
    "closed_form_check",
    "closed_form_series",
    "composition_factor",
    "corollary_conditions",
    "estimate_focal",
    "focal_values",
    "is_center",
    "moments",
    "return_map",
    "series_coefficients",
    "verify_center_numeric",
]
