"""
Center or focus
===============

Exact moments decide the question; the tabulated polynomial conditions
agree with them; every center factors through the conjugate of ``P1``.
"""

# %%
import random

from centerfocus.center_conditions import (
    SystemSpec,
    composition_factor,
    corollary_conditions,
    is_center,
    moments,
)
from centerfocus.sampling import composition_center, random_p1, random_system, slice_system

# %% Two quadratic examples with P1 = x.
focus = SystemSpec.from_coeffs(2, 1, 0, {(2, 0): 1, (0, 2): -1})
center = SystemSpec.from_coeffs(2, 1, 0, {(1, 1): 1})
for sys in (focus, center):
    print([str(m) for m in moments(sys).moments], is_center(sys), corollary_conditions(sys))

# %% xy = x * (sin t) on the circle: the factor is Pbar itself.
fac = composition_factor(center)
print(fac.powers, fac.coeffs, fac.residual.is_zero())
print(composition_factor(focus))

# %% Random systems of each degree: verdict, conditions, factorization.
rng = random.Random(0)
for n in range(2, 7):
    for sys in (random_system(rng, n), composition_center(rng, n)):
        verdict = is_center(sys)
        vanish = all(v == 0 for v in corollary_conditions(sys))
        print(n, verdict, vanish, composition_factor(sys) is not None)

# %% A center found only through the polynomial conditions still factors.
p1 = random_p1(rng)
sys = slice_system(rng, 5, p1, 3)
print(is_center(sys), composition_factor(sys).coeffs)

# %% With P1 = 0 the equation separates; only the mean of Pn matters.
print(is_center(SystemSpec.from_coeffs(3, 0, 0, {(2, 1): 1})))
print(is_center(SystemSpec.from_coeffs(2, 0, 0, {(2, 0): 1})))
