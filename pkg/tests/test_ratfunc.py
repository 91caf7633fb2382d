"""Rational function layer: canonical form, field laws, calculus."""

import random
from fractions import Fraction

import pytest

from kummer.poly import Poly
from kummer.ratfunc import RatFunc

from helpers import rand_nonzero_poly, rand_poly, rand_rat, rand_ratfunc

X = RatFunc.variable()


def test_canonical_form_invariants():
    rng = random.Random(201)
    for _ in range(300):
        f = rand_ratfunc(rng)
        assert f.den.leading == 1
        # coprimality: no common root may survive reduction
        from kummer.poly import poly_gcd

        assert poly_gcd(f.num, f.den).degree <= 0 or f.is_zero


def test_multiply_then_divide_round_trip():
    # structural equality must survive an arbitrary common factor
    rng = random.Random(202)
    for _ in range(1000):
        f = rand_ratfunc(rng, 3)
        g = rand_ratfunc(rng, 3)
        if g.is_zero:
            continue
        assert (f * g) / g == f


def test_field_laws_random():
    rng = random.Random(203)
    for _ in range(200):
        a, b, c = (rand_ratfunc(rng, 3) for _ in range(3))
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)
        if not a.is_zero:
            assert (b / a) * a == b


def test_derivative_quotient_rule():
    rng = random.Random(204)
    for _ in range(150):
        f = rand_ratfunc(rng, 3)
        g = rand_ratfunc(rng, 3)
        if g.is_zero:
            continue
        lhs = (f / g).derivative()
        rhs = (f.derivative() * g - f * g.derivative()) / (g * g)
        assert lhs == rhs


def test_derivative_product_rule():
    rng = random.Random(205)
    for _ in range(150):
        f, g = rand_ratfunc(rng, 3), rand_ratfunc(rng, 3)
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


def test_order_at_infinity():
    assert RatFunc.make(Poly.const(-4), Poly.variable() ** 2).order_at_infinity() == 2
    assert (X**2 + 1).order_at_infinity() == -2
    assert RatFunc.const(7).order_at_infinity() == 0
    rng = random.Random(206)
    for _ in range(100):
        f, g = rand_ratfunc(rng, 3), rand_ratfunc(rng, 3)
        if f.is_zero or g.is_zero:
            continue
        assert (f * g).order_at_infinity() == f.order_at_infinity() + g.order_at_infinity()


def test_eval_and_poles():
    f = (X + 1) / (X - 2)
    assert f.eval(0) == Fraction(-1, 2)
    assert f.has_pole_at(2)
    with pytest.raises(ZeroDivisionError):
        f.eval(2)


def test_negative_powers():
    f = (X + 1) / X
    assert f**-2 == (X * X) / ((X + 1) * (X + 1))
    assert f**0 == RatFunc.one()


def test_constant_detection():
    assert RatFunc.const(Fraction(3, 2)).as_constant() == Fraction(3, 2)
    g = (X + 1) / (X + 1)
    assert g.is_constant and g.as_constant() == 1
    with pytest.raises(ValueError):
        (X + 1).as_constant()


def test_polynomial_detection():
    f = (X**2 - 1) / (X - 1)
    assert f.is_polynomial
    assert f.as_polynomial() == Poly.from_coeffs([1, 1])


def test_division_by_zero_function():
    with pytest.raises(ZeroDivisionError):
        X / RatFunc.zero()
    with pytest.raises(ZeroDivisionError):
        RatFunc.make(Poly.one(), Poly.zero())
