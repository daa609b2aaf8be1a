"""Shared fixtures and independent oracles for the test suite.

The expansion oracle here deliberately avoids the engine's (P, Q) step
recurrences: it expands a high-precision *rational* approximation of the surd
with the schoolbook floor/reciprocal loop, at two precisions, and only trusts
the common stable prefix.
"""

from __future__ import annotations

from fractions import Fraction
from math import floor, isqrt

import pytest

from surdcf.engine import expand_sqrt


def rational_cf_prefix(x: Fraction, terms: int) -> list[int]:
    out = []
    for _ in range(terms):
        a = floor(x)
        out.append(a)
        frac = x - a
        if frac == 0:
            break
        x = 1 / frac
    return out


def sqrt_cf_oracle(d: int, terms: int) -> list[int]:
    """Leading CF quotients of sqrt(d), via stable rational approximation."""

    def run(prec: int) -> list[int]:
        approx = Fraction(isqrt(d * 10 ** (2 * prec)), 10**prec)
        return rational_cf_prefix(approx, terms)

    first, second = run(60), run(90)
    assert first == second, "oracle precision too low"
    return first


def surd_cf_oracle(p: int, q: int, d: int, terms: int) -> list[int]:
    """Leading CF quotients of (p + sqrt(d)) / q, same stabilization idea."""

    def run(prec: int) -> list[int]:
        approx = Fraction(isqrt(d * 10 ** (2 * prec)), 10**prec)
        return rational_cf_prefix((p + approx) / q, terms)

    first, second = run(60), run(90)
    assert first == second, "oracle precision too low"
    return first


@pytest.fixture(scope="session")
def expansions_10k() -> dict:
    """Exact engine expansions for every non-square d up to 10^4."""
    table = {}
    for d in range(2, 10_001):
        r = isqrt(d)
        if r * r == d:
            continue
        table[d] = expand_sqrt(d)
    return table
