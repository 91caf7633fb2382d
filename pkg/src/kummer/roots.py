"""Exact integer and rational root location for Q[x] polynomials.

Indicial equations hand us polynomials whose integer (sometimes rational)
roots decide denominator exponents and degree bounds, so the finders here
must be complete: every root found, none invented, independent of
coefficient size. Sturm sequences with bisection inside the Cauchy bound
give exactly that using nothing but Fraction arithmetic; in particular
there is no reliance on factoring large integers.

``integer_roots`` returns the distinct integer roots. ``rational_roots``
returns (root, multiplicity) pairs and is complete for roots in Q; it
reduces to the integer case through the classical monic substitution
y = lead * x.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd

from .poly import Poly, poly_gcd
from .rat import Rat


def _primitive_positive(p: Poly) -> Poly:
    """Scale by a positive rational to primitive integer coefficients.

    Positive scaling preserves the sign pattern, which is all the Sturm
    chain cares about, and keeps the intermediate integers small.
    """
    if p.is_zero:
        return p
    den_lcm = 1
    for c in p.coeffs:
        den_lcm = den_lcm * c.denominator // int_gcd(den_lcm, c.denominator)
    num_gcd = 0
    for c in p.coeffs:
        num_gcd = int_gcd(num_gcd, abs(c.numerator * (den_lcm // c.denominator)))
    return p.scale(Fraction(den_lcm, num_gcd))


def squarefree_part(p: Poly) -> Poly:
    if p.degree <= 0:
        return p.monic()
    return p.divexact(poly_gcd(p, p.derivative())).monic()


def sturm_chain(p: Poly) -> list[Poly]:
    chain = [_primitive_positive(p)]
    d = p.derivative()
    if not d.is_zero:
        chain.append(_primitive_positive(d))
        while True:
            rem = chain[-2] % chain[-1]
            if rem.is_zero:
                break
            chain.append(_primitive_positive(-rem))
            if chain[-1].degree == 0:
                break
    return chain


def _sign_changes(chain: list[Poly], t: Rat) -> int:
    signs = []
    for q in chain:
        v = q.eval(t)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def cauchy_root_bound(p: Poly) -> int:
    """An integer B with every real root strictly inside (-B, B)."""
    if p.degree <= 0:
        return 1
    lead = abs(p.leading)
    worst = max(abs(c) for c in p.coeffs[:-1])
    bound = 1 + worst / lead
    b = bound.numerator // bound.denominator + 1
    return max(b, 1)


def _find_one_integer_root(sf: Poly) -> int | None:
    """First integer root of a squarefree polynomial found by bisection."""
    if sf.degree <= 0:
        return None
    if sf.degree == 1:
        root = -sf.coeff(0) / sf.coeff(1)
        return root.numerator if root.denominator == 1 else None
    bound = cauchy_root_bound(sf)
    chain = sturm_chain(sf)
    stack = [(-bound, bound)]
    counts = {}

    def count_between(lo: int, hi: int) -> int:
        for t in (lo, hi):
            if t not in counts:
                counts[t] = _sign_changes(chain, Fraction(t))
        return counts[lo] - counts[hi]

    while stack:
        lo, hi = stack.pop()
        if hi - lo <= 1:
            continue
        if count_between(lo, hi) == 0:
            continue
        mid = (lo + hi) // 2
        if sf.eval(mid) == 0:
            return mid
        stack.append((lo, mid))
        stack.append((mid, hi))
    return None


def integer_roots(p: Poly) -> list[int]:
    """All distinct integer roots, sorted ascending."""
    if p.is_zero:
        raise ValueError("every integer is a root of the zero polynomial")
    sf = squarefree_part(p)
    found: list[int] = []
    while True:
        hit = _find_one_integer_root(sf)
        if hit is None:
            return sorted(found)
        found.append(hit)
        sf = sf.divexact(Poly.from_roots([hit]))


def rational_roots(p: Poly) -> list[tuple[Rat, int]]:
    """All rational roots with multiplicities, sorted by value."""
    if p.is_zero:
        raise ValueError("every rational is a root of the zero polynomial")
    if p.degree <= 0:
        return []
    q = _primitive_positive(p)
    n = int(q.degree)
    lead = q.leading.numerator
    # y = lead * x turns rational roots of q into integer roots of a
    # monic integer polynomial: coeff_i -> coeff_i * lead^(n-1-i).
    transformed = Poly.from_coeffs(
        [q.coeff(i) * Fraction(lead) ** (n - 1 - i) for i in range(n + 1)]
    )
    out = []
    for y in integer_roots(transformed):
        root = Fraction(y, lead)
        mult = 0
        rem = p
        factor = Poly.from_roots([root])
        while True:
            quo, r = divmod(rem, factor)
            if not r.is_zero:
                break
            mult += 1
            rem = quo
        if mult:
            out.append((root, mult))
    out.sort(key=lambda pair: pair[0])
    return out
