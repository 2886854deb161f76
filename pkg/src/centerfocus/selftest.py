"""Machine checks of the combinatorial identities, as pass/fail counts."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .combinatorics import (
    direct_expansion,
    generating_series_coeff,
    harmonic_expansion,
    lambda_closed,
    lambda_coeff,
    mu_table,
)

__all__ = ["SuiteResult", "lambda_suite", "series_suite", "harmonic_suite", "run_all"]


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, ok: bool) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1


def lambda_suite(m_max: int = 15, k_max: int = 25) -> SuiteResult:
    """Recurrence against closed form for every ``m <= m_max``, ``0 <= j <= k <= k_max``."""
    res = SuiteResult("lambda_closed_form")
    for m in range(1, m_max + 1):
        for k in range(k_max + 1):
            for j in range(k + 1):
                res.record(lambda_coeff(k, j, m) == lambda_closed(k, j, m))
    return res


def series_suite(n_max: int = 40, tails: int = 5, seed: int = 0) -> SuiteResult:
    """Low coefficients of the truncated geometric power, with random tails."""
    rng = random.Random(seed)
    res = SuiteResult("generating_series")
    for n in range(1, n_max + 1):
        for _ in range(tails):
            tail = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
            for k in range(n):
                res.record(generating_series_coeff(n, k, tail) == comb(n + k - 1, k))
    return res


def _random_pair(rng: random.Random) -> tuple[Fraction, Fraction]:
    while True:
        a = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        b = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if a or b:
            return a, b


def harmonic_suite(k_max: int = 12, pairs: int = 10, seed: int = 0) -> SuiteResult:
    """Mode recurrence against brute force, and the factorization through mu.

    For each random ``(A, B)`` and ``k <= k_max`` this checks that the
    recurrence line equals the direct product, that every mode ``2j+1`` is
    ``mu[2k+1, 2j+1]`` times the top mode of line ``j``, and the ratio rule
    between consecutive near-diagonal mu entries.
    """
    rng = random.Random(seed)
    res = SuiteResult("harmonic_expansion")
    for _ in range(pairs):
        a, b = _random_pair(rng)
        mu = mu_table(max(k_max, 1), a, b)
        lines = [harmonic_expansion(k, a, b) for k in range(k_max + 1)]
        tops = [line.modes[2 * k + 1] for k, line in enumerate(lines)]
        for k, line in enumerate(lines):
            res.record(line.modes == direct_expansion(k, a, b).modes)
            for j in range(k + 1):
                m = mu.get(2 * k + 1, 2 * j + 1)
                res.record(line.modes[2 * j + 1] == (m * tops[j][0], m * tops[j][1]))
        for k in range(1, k_max):
            lhs = mu.get(2 * k + 3, 2 * k + 1)
            res.record(lhs == Fraction(2 * k + 1, 2 * k - 1) * mu.get(2 * k + 1, 2 * k - 1))
    return res


def run_all(seed: int = 0) -> list[SuiteResult]:
    return [lambda_suite(), series_suite(seed=seed), harmonic_suite(seed=seed)]
