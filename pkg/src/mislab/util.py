"""Exact and guarded comparisons of big integers against power products."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable

import mpmath

from .constants import DPS

# Relative slack granted to the bound side when it is irrational.
GUARD = 1e-9


class BoundViolation(AssertionError):
    """A counting inequality failed."""


def exact_le(lhs: int, coeff: int, powers: Iterable[tuple[int, Fraction]] = ()) -> bool:
    """Decide ``lhs <= coeff * prod(base ** exp)`` exactly.

    Bases are positive integers and exponents rationals; both sides are
    raised to the common denominator of the exponents.
    """
    powers = [(b, Fraction(e)) for b, e in powers]
    den = 1
    for _, e in powers:
        den = lcm(den, e.denominator)
    left = lhs**den
    right = coeff**den
    for b, e in powers:
        k = e * den
        assert k.denominator == 1
        k = int(k)
        if k >= 0:
            right *= b**k
        else:
            left *= b ** (-k)
    return left <= right


def mp_le(lhs: int, rhs) -> bool:
    """``lhs <= rhs * (1 + GUARD)`` at 50 significant digits."""
    with mpmath.workdps(DPS):
        return mpmath.mpf(lhs) <= mpmath.mpf(rhs) * (1 + mpmath.mpf(GUARD))


def mp_log2(x) -> float:
    with mpmath.workdps(DPS):
        return float(mpmath.log(mpmath.mpf(x), 2))


def mp_pow(base, exp: Fraction):
    with mpmath.workdps(DPS):
        exp = Fraction(exp)
        return mpmath.mpf(base) ** (mpmath.mpf(exp.numerator) / exp.denominator)
