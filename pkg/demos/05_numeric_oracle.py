"""
Floating-point return map
=========================

Integrate one turn with DOP853, read off the residual ``Pi(c) - c``, fit
focal values, and compare with the exact answers.
"""

# %%
import math
import random

import numpy as np

from centerfocus.center_conditions import SystemSpec, is_center
from centerfocus.focal_values import focal_values
from centerfocus.numeric_oracle import (
    IntegratorConfig,
    default_ladder,
    estimate_focal,
    return_map,
    verify_center_numeric,
)
from centerfocus.sampling import composition_center, random_system

focus = SystemSpec.from_coeffs(2, 1, 0, {(2, 0): 1, (0, 2): -1})
center = SystemSpec.from_coeffs(2, 1, 0, {(1, 1): 1})

# %% Residuals: fifth order for the focus, roundoff for the center.
for c in (0.02, 0.05, 0.1):
    r = return_map(focus, c).residual
    print(c, r, r / c**5, return_map(center, c).residual)

# %% The two formulations agree; the reciprocal one keeps relative accuracy.
direct = IntegratorConfig(formulation="direct")
print(return_map(focus, 0.02).residual, return_map(focus, 0.02, direct).residual)

# %% Least-squares focal values against the exact -pi/2.
est = estimate_focal(focus, 5, default_ladder())
print(est, -math.pi / 2)

# %% Agreement with the exact verdict on random systems.
rng = random.Random(0)
for n in range(2, 7):
    for sys in (random_system(rng, n), composition_center(rng, n)):
        exact = is_center(sys).is_center
        numeric = verify_center_numeric(sys)
        rep = focal_values(sys)
        sign = "" if exact else np.sign(return_map(sys, 0.02).residual) == rep.values[rep.first_nonzero].sign()
        print(n, exact, numeric, sign)
