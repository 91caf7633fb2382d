"""Pole structure and local expansions of rational functions.

The classifier certifies only curvatures whose poles sit at rational
points, so the den-factoring step here is the gatekeeper: every
denominator must split into linear factors over Q, and anything left over
raises :class:`UnsupportedPolesError` carrying the offending factor.

Expansions come in three flavors: Taylor coefficients at an ordinary
point (``series_at``), the full Laurent data at any point (``laurent_at``),
and the descending expansion at infinity. All are exact and are the
oracles the Galois layer tests itself against.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnsupportedPolesError
from .poly import Poly
from .rat import Rat
from .ratfunc import RatFunc
from .roots import rational_roots
from .series import s_inverse, s_mul


@dataclass(frozen=True)
class PoleData:
    """One pole: location, order, and the principal-part coefficients.

    ``principal`` maps exponent -> coefficient for exponents
    -order .. -1 (zeros omitted never occur for the leading exponent).
    """

    location: Rat
    order: int
    principal: dict[int, Rat]


@dataclass(frozen=True)
class PFTerm:
    """A single partial-fraction summand coefficient/(x - location)^power."""

    location: Rat
    power: int
    coefficient: Rat


def linear_factors(den: Poly) -> list[tuple[Rat, int]]:
    """Roots with multiplicity; raises when the factorization is incomplete."""
    if den.degree <= 0:
        return []
    pairs = rational_roots(den)
    total = sum(m for _, m in pairs)
    if total < den.degree:
        residual = den
        for root, mult in pairs:
            residual = residual.divexact(Poly.from_roots([root] * mult))
        raise UnsupportedPolesError(
            "denominator has a factor with no rational root",
            residual_factor=residual.monic(),
        )
    return pairs


def rational_poles(f: RatFunc, depth: int = 0) -> list[PoleData]:
    """All poles of ``f``, sorted by location.

    ``depth`` asks for that many extra Laurent coefficients beyond the
    principal part (they land in ``principal`` with exponents >= 0 and
    are occasionally convenient for local analysis).
    """
    out = []
    for location, order in linear_factors(f.den):
        lead, coeffs = laurent_at(f, location, order + depth)
        principal = {}
        for k, c in enumerate(coeffs):
            if c != 0:
                principal[lead + k] = c
        out.append(PoleData(location=location, order=order, principal=principal))
    out.sort(key=lambda p: p.location)
    return out


def laurent_at(f: RatFunc, point: Rat, n_terms: int) -> tuple[int, list[Rat]]:
    """Expansion at a finite point: returns (lead, coeffs).

    ``f`` equals sum of coeffs[k] * (x - point)^(lead + k) locally;
    ``lead`` is the valuation of ``f`` at the point (negative at a pole).
    The zero function has no valuation and raises.
    """
    if f.is_zero:
        raise ValueError("zero function has no local expansion")
    point = Fraction(point)
    num = f.num.shift(point)
    den = f.den.shift(point)
    v_num = next(k for k, c in enumerate(num.coeffs) if c != 0)
    v_den = next(k for k, c in enumerate(den.coeffs) if c != 0)
    lead = v_num - v_den
    n = list(num.coeffs[v_num:])
    d = list(den.coeffs[v_den:])
    width = max(n_terms, 1)
    n += [Fraction(0)] * (width - len(n))
    d += [Fraction(0)] * (width - len(d))
    coeffs = s_mul(n[:width], s_inverse(d[:width]))
    return lead, coeffs


def series_at(f: RatFunc, point: Rat, order: int) -> list[Rat]:
    """Taylor coefficients c_0..c_order at an ordinary point."""
    if f.is_zero:
        return [Fraction(0)] * (order + 1)
    if f.has_pole_at(point):
        raise ValueError(f"{point} is a pole, no Taylor expansion there")
    lead, coeffs = laurent_at(f, point, order + 1)
    out = [Fraction(0)] * (order + 1)
    for k, c in enumerate(coeffs):
        e = lead + k
        if 0 <= e <= order:
            out[e] = c
    return out


def series_at_infinity(f: RatFunc, n_terms: int) -> tuple[int, list[Rat]]:
    """Descending expansion: f = sum of coeffs[k] * x^(lead - k).

    ``lead`` is deg num - deg den, i.e. minus the order at infinity.
    """
    if f.is_zero:
        raise ValueError("zero function has no expansion at infinity")
    lead = -f.order_at_infinity()
    # x = 1/t turns the descending expansion into a Taylor series in t.
    num_rev = list(reversed(f.num.coeffs))
    den_rev = list(reversed(f.den.coeffs))
    width = max(n_terms, 1)
    num_rev += [Fraction(0)] * (width - len(num_rev))
    den_rev += [Fraction(0)] * (width - len(den_rev))
    coeffs = s_mul(num_rev[:width], s_inverse(den_rev[:width]))
    return lead, coeffs


def partial_fractions(f: RatFunc) -> tuple[Poly, list[PFTerm]]:
    """Polynomial part plus principal parts at every pole.

    The terms are sorted by (location, power) and reconstruct ``f``
    exactly; the round trip is asserted in the tests rather than here
    because this function sits inside hot loops.
    """
    quotient, _ = divmod(f.num, f.den)
    terms = []
    for pole in rational_poles(f):
        for exponent in range(-pole.order, 0):
            c = pole.principal.get(exponent, Fraction(0))
            if c != 0:
                terms.append(
                    PFTerm(location=pole.location, power=-exponent, coefficient=c)
                )
    terms.sort(key=lambda t: (t.location, t.power))
    return quotient, terms


def from_partial_fractions(quotient: Poly, terms: list[PFTerm]) -> RatFunc:
    total = RatFunc.make(quotient)
    for t in terms:
        monomial = RatFunc.make(
            Poly.const(t.coefficient),
            Poly.from_roots([t.location] * t.power),
        )
        total = total + monomial
    return total
