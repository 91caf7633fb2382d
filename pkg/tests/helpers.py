"""Shared random generators for the test suite.

Every generator takes an explicit ``random.Random`` so each test controls
its own seed; nothing here touches global state, which keeps the timed
suites deterministic run to run.
"""

from __future__ import annotations

import random
from fractions import Fraction

from kummer.poly import Poly
from kummer.ratfunc import RatFunc


def rand_rat(rng: random.Random, lo: int = -9, hi: int = 9, max_den: int = 5) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_int_nonzero(rng: random.Random, lo: int = -9, hi: int = 9) -> int:
    while True:
        v = rng.randint(lo, hi)
        if v != 0:
            return v


def rand_poly(rng: random.Random, max_deg: int = 4, lo: int = -9, hi: int = 9) -> Poly:
    deg = rng.randint(0, max_deg)
    return Poly.from_coeffs([rand_rat(rng, lo, hi) for _ in range(deg + 1)])


def rand_nonzero_poly(rng: random.Random, max_deg: int = 4) -> Poly:
    while True:
        p = rand_poly(rng, max_deg)
        if not p.is_zero:
            return p


def rand_ratfunc(rng: random.Random, max_deg: int = 4) -> RatFunc:
    return RatFunc.make(rand_poly(rng, max_deg), rand_nonzero_poly(rng, max_deg))


def rand_denominator(rng: random.Random, max_poles: int = 3, max_total_order: int = 4) -> Poly:
    """Product of linear factors at distinct small rational points."""
    n_poles = rng.randint(0, max_poles)
    locations = rng.sample(range(-5, 6), n_poles)
    den = Poly.one()
    budget = max_total_order
    for loc in locations:
        if budget == 0:
            break
        mult = rng.randint(1, min(2, budget))
        budget -= mult
        point = Fraction(loc, rng.choice([1, 1, 2]))
        den = den * Poly.from_roots([point] * mult)
    return den


def rand_ratfunc_rational_poles(rng: random.Random, max_num_deg: int = 4) -> RatFunc:
    """Random rational function whose poles are all at rational points."""
    return RatFunc.make(rand_poly(rng, max_num_deg), rand_denominator(rng))


def rand_riccati_u(rng: random.Random) -> RatFunc:
    """Random first-order witness: at most 3 rational poles, degrees <= 4."""
    while True:
        num = rand_poly(rng, rng.randint(0, 4), lo=-6, hi=6)
        den = rand_denominator(rng)
        if not num.is_zero:
            return RatFunc.make(num, den)


# -- jet-layer generators ---------------------------------------------------

from kummer.jets.compose import Jet3  # noqa: E402
from kummer.jets.mpoly import MPoly  # noqa: E402
from kummer.jets.symbols import const, frame, letter  # noqa: E402

SYMBOL_POOL = [frame(0), frame(1), frame(2), letter("a", 0), letter("a", 1), const("c")]


def rand_mpoly(rng: random.Random, max_terms: int = 4, max_exp: int = 2) -> MPoly:
    d = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = {}
        for _ in range(rng.randint(0, 2)):
            s = rng.choice(SYMBOL_POOL)
            mono[s] = rng.randint(1, max_exp)
        key = tuple(sorted(mono.items(), key=lambda p: (p[0].kind, p[0].name, p[0].index)))
        d[key] = d.get(key, 0) + Fraction(rand_int_nonzero(rng, -5, 5))
    return MPoly.from_dict(d)


def rand_nonzero_mpoly(rng: random.Random, max_terms: int = 4) -> MPoly:
    while True:
        p = rand_mpoly(rng, max_terms)
        if not p.is_zero:
            return p


def rand_jet3(rng: random.Random, source: Fraction | None = None) -> Jet3:
    src = source if source is not None else rand_rat(rng)
    return Jet3(
        source=src,
        target=rand_rat(rng),
        d1=Fraction(rand_int_nonzero(rng, -6, 6), rng.randint(1, 3)),
        d2=rand_rat(rng, -6, 6),
        d3=rand_rat(rng, -6, 6),
    )


def jet_of_ratfunc(f: RatFunc, point: Fraction) -> Jet3:
    """The numeric 3-jet of a rational map at a point where it is defined."""
    d1 = f.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    return Jet3(
        source=point,
        target=f.eval(point),
        d1=d1.eval(point),
        d2=d2.eval(point),
        d3=d3.eval(point),
    )


def rand_mobius(rng: random.Random) -> RatFunc:
    """A random invertible fractional-linear map."""
    while True:
        a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
        if a * d - b * c != 0:
            num = Poly.from_coeffs([b, a])
            den = Poly.from_coeffs([d, c])
            return RatFunc.make(num, den)


# -- span comparisons for solution lists ------------------------------------

from kummer.linalg import solve  # noqa: E402
from kummer.poly import poly_lcm  # noqa: E402


def ratfunc_span_contains(basis: list[RatFunc], target: RatFunc) -> bool:
    """Whether target is a Q-linear combination of the basis functions."""
    if target.is_zero:
        return True
    if not basis:
        return False
    den = Poly.one()
    for f in [*basis, target]:
        den = poly_lcm(den, f.den)
    vectors = [(f * den).as_polynomial() for f in basis]
    goal = (target * den).as_polynomial()
    height = max(int(p.degree) for p in [*vectors, goal] if not p.is_zero) + 1
    matrix = [[v.coeff(r) for v in vectors] for r in range(height)]
    return solve(matrix, [goal.coeff(r) for r in range(height)]) is not None


def same_ratfunc_span(a: list[RatFunc], b: list[RatFunc]) -> bool:
    return (
        len(a) == len(b)
        and all(ratfunc_span_contains(a, f) for f in b)
        and all(ratfunc_span_contains(b, f) for f in a)
    )
