"""Truncated power series over Q as plain coefficient lists.

A series is a list of Fractions, index = exponent. Truncation length is
the caller's business; binary operations return min-length results so a
shorter operand never manufactures fake precision.
"""

from __future__ import annotations

from fractions import Fraction

from .rat import Rat

Series = list


def s_add(a: list[Rat], b: list[Rat]) -> list[Rat]:
    n = min(len(a), len(b))
    return [a[k] + b[k] for k in range(n)]


def s_sub(a: list[Rat], b: list[Rat]) -> list[Rat]:
    n = min(len(a), len(b))
    return [a[k] - b[k] for k in range(n)]


def s_neg(a: list[Rat]) -> list[Rat]:
    return [-c for c in a]


def s_scale(a: list[Rat], c: Rat) -> list[Rat]:
    return [c * x for x in a]


def s_mul(a: list[Rat], b: list[Rat]) -> list[Rat]:
    n = min(len(a), len(b))
    out = [Fraction(0)] * n
    for i in range(n):
        if a[i] == 0:
            continue
        for j in range(n - i):
            if b[j]:
                out[i + j] += a[i] * b[j]
    return out


def s_derivative(a: list[Rat]) -> list[Rat]:
    return [k * a[k] for k in range(1, len(a))]


def s_inverse(a: list[Rat]) -> list[Rat]:
    """Multiplicative inverse; requires a nonzero constant term."""
    if not a or a[0] == 0:
        raise ZeroDivisionError("series has no inverse: zero constant term")
    inv = [1 / a[0]]
    for n in range(1, len(a)):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if k < len(a) and a[k]:
                acc += a[k] * inv[n - k]
        inv.append(-acc / a[0])
    return inv
