"""Parser and renderer for the expression syntax."""

import random
from fractions import Fraction

import pytest

from kummer.errors import RatParseError
from kummer.grammar import (
    parse_expression,
    parse_ratfunc,
    render_poly,
    render_ratfunc,
    tokenize,
)
from kummer.poly import Poly
from kummer.ratfunc import RatFunc

X = RatFunc.variable()


def test_tokenize_kinds_and_positions():
    tokens = tokenize("x + 12*foo")
    assert [(t.kind, t.text, t.position) for t in tokens] == [
        ("ident", "x", 0),
        ("+", "+", 2),
        ("int", "12", 4),
        ("*", "*", 6),
        ("ident", "foo", 7),
        ("end", "", 10),
    ]


def test_tokenize_rejects_unknown_characters():
    with pytest.raises(RatParseError) as err:
        tokenize("x$2")
    assert err.value.position == 1


def test_parse_simple_pole():
    assert parse_ratfunc("-4/x^2") == RatFunc.make(-4, X * X)


def test_parse_reduces_to_canonical_form():
    assert parse_ratfunc("(x^2-1)/(x^3-x)") == RatFunc.make(1, X)


def test_parse_integer_ratio():
    assert parse_ratfunc("3/4") == RatFunc.const(Fraction(3, 4))


def test_parse_precedence_and_associativity():
    assert parse_ratfunc("1+2*3") == RatFunc.const(7)
    assert parse_ratfunc("1-2-3") == RatFunc.const(-4)
    assert parse_ratfunc("2/x/x") == RatFunc.make(2, X * X)
    assert parse_ratfunc("-x^2") == -(X * X)
    assert parse_ratfunc("(-x)^2") == X * X


def test_parse_ignores_whitespace():
    assert parse_ratfunc(" - 4 / x ^ 2 ") == parse_ratfunc("-4/x^2")


def test_parse_rejects_second_identifier():
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("x + y")
    assert "'x'" in err.value.message and "'y'" in err.value.message
    assert err.value.position == 4


def test_parse_rejects_wrong_required_variable():
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("x^2", variable="t")
    assert err.value.position == 0
    assert parse_ratfunc("t^2", variable="t") == X * X


def test_parse_reports_division_by_zero():
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("1/(x-x)")
    assert "division by zero" in err.value.message
    assert err.value.position == 1
    with pytest.raises(RatParseError):
        parse_ratfunc("1/0")


def test_parse_rejects_dangling_operator():
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("x^")
    assert err.value.position == 2
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("3//4")
    assert err.value.position == 2


def test_parse_rejects_trailing_garbage():
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("x^2^3")
    assert err.value.position == 3


def test_parse_rejects_negative_exponent():
    with pytest.raises(RatParseError):
        parse_ratfunc("x^-2")


def test_parse_rejects_huge_exponent():
    with pytest.raises(RatParseError) as err:
        parse_ratfunc("x^999999999")
    assert "too large" in err.value.message


def test_parse_expression_reports_bound_variable():
    assert parse_expression("t^2+1") == (X * X + 1, "t")
    assert parse_expression("5") == (RatFunc.const(5), "x")
    assert parse_expression("5", variable="t") == (RatFunc.const(5), "t")


def test_render_poly_descending_no_spaces():
    p = Poly.from_coeffs([Fraction(-1, 2), Fraction(3, 4), -1])
    assert render_poly(p) == "-x^2+3/4*x-1/2"
    assert render_poly(Poly.zero()) == "0"
    assert render_poly(Poly.from_coeffs([0, -1])) == "-x"


def test_render_ratfunc_frozen_forms():
    cases = [
        (RatFunc.zero(), "0"),
        (X, "x"),
        (RatFunc.make(1, X), "1/x"),
        (RatFunc.make(-4, X * X), "-4/x^2"),
        (RatFunc.const(Fraction(3, 4)), "3/4"),
        (RatFunc.make(Fraction(5, 2), X), "5/2/x"),
        (RatFunc.make(X * X - 1, X**3), "(x^2-1)/x^3"),
        (RatFunc.make(X, X * X - 1), "x/(x^2-1)"),
        (RatFunc.make(-X, X * X - 2), "-x/(x^2-2)"),
    ]
    for value, text in cases:
        assert render_ratfunc(value) == text
        assert parse_ratfunc(text) == value


def test_render_respects_variable_name():
    assert render_ratfunc(RatFunc.make(1, X), "t") == "1/t"
    assert parse_ratfunc("1/t", variable="t") == RatFunc.make(1, X)


def _random_ratfunc(rng):
    def poly():
        degree = rng.randrange(0, 5)
        return Poly.from_coeffs([rng.randint(-9, 9) for _ in range(degree + 1)])

    num = poly()
    den = poly()
    while den.is_zero:
        den = poly()
    return RatFunc.make(num, den)


def test_parse_render_round_trip():
    rng = random.Random(20260823)
    for _ in range(1000):
        f = _random_ratfunc(rng)
        text = render_ratfunc(f)
        assert parse_ratfunc(text) == f
        assert render_ratfunc(parse_ratfunc(text)) == text
