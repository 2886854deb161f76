"""
Combinatorial identities
========================

The lambda table, the truncated geometric power and the Fourier lines of
``Pbar**(2k) * P``, each checked against an independent computation.
"""

# %%
from fractions import Fraction
from math import comb

from centerfocus.combinatorics import (
    direct_expansion,
    generating_series_coeff,
    harmonic_expansion,
    lambda_closed,
    lambda_coeff,
    lambda_table,
    mu_table,
)
from centerfocus.selftest import run_all

# %% Low coefficients of (1 + y + ... + y^(n-1) + tail)^n do not see the tail.
for tail in ([], [Fraction(7, 3), -1], [100]):
    print(tail, [generating_series_coeff(6, k, tail) for k in range(6)])
print([comb(6 + k - 1, k) for k in range(6)])

# %% Lambda table for degree 5 (m = 2): recurrence against binomial closed form.
for k in range(5):
    print([lambda_coeff(k, j, 2) for j in range(k + 1)], [lambda_closed(k, j, 2) for j in range(k + 1)])

# %% The same recurrence works for even degree; there the binomial is C(n+j-2, j).
lam = lambda_table(2, 2)
print("n=2 diagonal:", [lam[(k, k)] for k in range(3)])

# %% Fourier line of sin^4 t cos t, by recurrence and by brute force.
print(harmonic_expansion(2, 1, 0).modes)
print(direct_expansion(2, 1, 0).modes)

# %% Every mode is a mu multiple of a diagonal mode.
A, B = Fraction(2, 3), Fraction(-1, 4)
mu = mu_table(4, A, B)
line = harmonic_expansion(4, A, B)
for j in range(5):
    top = harmonic_expansion(j, A, B).modes[2 * j + 1]
    m = mu.get(9, 2 * j + 1)
    print(2 * j + 1, line.modes[2 * j + 1] == (m * top[0], m * top[1]), m)

# %% The full self-test at the acceptance ranges.
for suite in run_all():
    print(suite)
