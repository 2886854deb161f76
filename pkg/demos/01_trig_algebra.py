"""
Exact trigonometric polynomials
===============================

Products, primitives and full-period values with rational coefficients,
with pi kept as a symbol.
"""

# %%
from fractions import Fraction

import numpy as np

from centerfocus.trig_algebra import (
    HomogPoly,
    PolyTrig,
    TrigPoly,
    antiderivative_from_zero,
    circle_restriction,
    eval_full_period,
    period_integral,
    trig_pow,
)

# %% Restrict homogeneous polynomials to the unit circle.
print(circle_restriction(HomogPoly(2, {(2, 0): 1, (0, 2): -1})))  # cos 2t
print(circle_restriction(HomogPoly(3, {(3, 0): 1})))  # 3/4 cos t + 1/4 cos 3t

# %% Powers expand by product-to-sum; compare against sampling.
s4 = trig_pow(TrigPoly.sin(1), 4)
print(s4)
t = np.linspace(0, 2 * np.pi, 9)
print(np.max(np.abs(s4(t) - np.sin(t) ** 4)))

# %% A constant integrates to t, so primitives live in PolyTrig.
f = TrigPoly.cos(1) * TrigPoly.cos(1)  # 1/2 + 1/2 cos 2t
F = antiderivative_from_zero(f)
print(F)
print(eval_full_period(F), "==", period_integral(f))

# %% t cos t evaluated at 2 pi.
print(eval_full_period(PolyTrig.theta(1) * PolyTrig.embed(TrigPoly.cos(1))))

# %% The primitive of A cos t + B sin t vanishes at both ends of the period.
A, B = Fraction(3, 2), Fraction(-2, 5)
Pt = antiderivative_from_zero(TrigPoly({1: (A, B)}))
print(Pt, "->", eval_full_period(Pt))
