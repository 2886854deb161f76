"""
Focal values
============

The return map ``Pi(c) = c + sum V_k c**k`` computed exactly from the
series recurrence, and the closed forms for its coefficients.
"""

# %%
import random
from fractions import Fraction

from centerfocus.center_conditions import SystemSpec, tilde_moments
from centerfocus.focal_values import closed_form_check, closed_form_series, focal_values, series_coefficients
from centerfocus.sampling import random_system
from centerfocus.trig_algebra import PolyTrig, trig_pow

# %% Quadratic focus: the first nonzero value sits at order 5.
focus = SystemSpec.from_coeffs(2, 1, 0, {(2, 0): 1, (0, 2): -1})
rep = focal_values(focus, 7)
for k, v in rep.values.items():
    print(f"V_{k} = {v}")

# %% It is lambda[2, 2] times the second moment against the primitive of P1.
print(tilde_moments(focus)[2], closed_form_check(focus, 2))

# %% Below order n+1 the coefficients are powers of the primitive.
sys = random_system(random.Random(1), 4)
tab = series_coefficients(sys, 9)
pt = PolyTrig.embed(sys.P1_tilde)
print([tab.a(k) == trig_pow(pt, k - 1) for k in range(2, 5)])

# %% Above it, a binomial sum; the top coefficient also carries (n+1)/2 (int Pn)^2.
print([tab.a(5 + k) == closed_form_series(sys, k) for k in range(5)])
gap = tab.a(9) - closed_form_series(sys, 4, square_term=False)
print(gap == sys.Pn_bar * sys.Pn_bar * Fraction(5, 2))

# %% Centers: every coefficient stays periodic, every value vanishes.
center = SystemSpec.from_coeffs(2, 1, 0, {(1, 1): 1})
tab = series_coefficients(center, 8)
print([tab.a(k).theta_degree for k in range(1, 9)], focal_values(center).first_nonzero)
