"""Exact rational scalars.

Everything in this package computes over Q. ``Rat`` is an alias for
``fractions.Fraction``: exact, auto-reducing, hashable, with structural
equality. The helpers below add the few operations Fraction does not
ship, chiefly deciding whether a rational is a perfect square and taking
its exact square root when it is.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rat = Fraction

RAT_ZERO = Fraction(0)
RAT_ONE = Fraction(1)


def rat(num: int | str | Fraction, den: int | None = None) -> Rat:
    """Build a Rat from an int, a string like ``"3/2"``, or a pair."""
    if den is None:
        return Fraction(num)
    return Fraction(num, den)


def rat_sqrt(q: Rat) -> Rat | None:
    """Exact square root of ``q``, or None when ``q`` is not a rational square.

    Negative inputs return None: the callers that probe square roots are
    deciding membership in Q, and a negative rational has no real square
    root at all, let alone a rational one.
    """
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    root_num = math.isqrt(num)
    if root_num * root_num != num:
        return None
    root_den = math.isqrt(den)
    if root_den * root_den != den:
        return None
    return Fraction(root_num, root_den)


def is_integer(q: Rat) -> bool:
    return q.denominator == 1


def as_int(q: Rat) -> int:
    """The integer value of ``q``; raises if ``q`` is not an integer."""
    if q.denominator != 1:
        raise ValueError(f"{q} is not an integer")
    return q.numerator
