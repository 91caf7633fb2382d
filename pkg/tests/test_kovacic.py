"""Galois classification of y'' = r y: tags, certificates, cross-checks."""

import random
from fractions import Fraction

import pytest

from kummer.galois.kovacic import (
    GaloisClass,
    TAGS,
    dihedral_certificate,
    exp_integral_is_algebraic,
    classify_normal_form,
    primitive_certificate,
    sym2_exponential_defect,
    symmetric_square_operator,
    symmetric_square_rational_basis,
)
from kummer.galois.riccati import riccati_defect
from kummer.poly import Poly
from kummer.ratfunc import RatFunc

from helpers import same_ratfunc_span

X = RatFunc.variable()


def triangle_equation(d0: Fraction, d1: Fraction, dinf: Fraction) -> RatFunc:
    """Second-order equation with three regular points (0, 1, infinity)
    whose local exponent differences are the given fractions."""
    b0 = (d0 * d0 - 1) / 4
    b1 = (d1 * d1 - 1) / 4
    c = (dinf * dinf - 1) / 4 - b0 - b1
    return b0 / X**2 + b1 / (X - 1) ** 2 + c / (X * (X - 1))


# -- algebraicity of exponential integrals ----------------------------------


def test_sums_of_simple_poles_are_algebraic():
    assert exp_integral_is_algebraic(RatFunc.zero())
    assert exp_integral_is_algebraic(RatFunc.make(3, 4) / X)
    assert exp_integral_is_algebraic(-1 / (2 * X) + 5 / (3 * (X + 2)))


def test_polynomial_or_deep_pole_parts_are_transcendental():
    assert not exp_integral_is_algebraic(RatFunc.one())
    assert not exp_integral_is_algebraic(X)
    assert not exp_integral_is_algebraic(1 / X**2)
    assert not exp_integral_is_algebraic(1 / X + 1 / X**2)


# -- symmetric square -------------------------------------------------------


def test_symmetric_square_annihilates_products():
    # y'' = y has solutions with log derivatives +-1; z = e^{2x}, 1, e^{-2x}
    # should be annihilated, and the rational kernel is the middle one.
    basis = symmetric_square_rational_basis(RatFunc.one())
    assert basis == [RatFunc.one()]


def test_symmetric_square_frozen_kernel():
    basis = symmetric_square_rational_basis(2 / X**2)
    assert same_ratfunc_span(basis, [X, X**4, 1 / X**2])


# -- frozen classifications -------------------------------------------------


def test_flat_equation_is_projectively_trivial():
    g = classify_normal_form(RatFunc.zero())
    assert g.tag == "projectively_trivial"
    assert len(g.sym2_basis) == 3
    assert g.riccati.count_class == "infinite"


def test_resonant_double_pole_is_projectively_trivial():
    g = classify_normal_form(2 / X**2)
    assert g.tag == "projectively_trivial"
    assert g.riccati.solutions == (2 / X, -1 / X)
    assert same_ratfunc_span(list(g.sym2_basis), [X, X**4, 1 / X**2])


def test_constant_coefficient_torus():
    g = classify_normal_form(RatFunc.one())
    assert g.tag == "torus_infinite"
    assert g.riccati.solutions == (RatFunc.one(), RatFunc.const(-1))
    assert g.sym2_basis == (RatFunc.one(),)


def test_quarter_exponent_torus_is_finite():
    g = classify_normal_form(RatFunc.make(-3, 16) / X**2)
    assert g.tag == "torus_finite"
    assert g.riccati.solutions == (
        RatFunc.make(3, 4) / X,
        RatFunc.make(1, 4) / X,
    )


def test_weber_like_borel():
    g = classify_normal_form(1 + X**2)
    assert g.tag == "borel_full"
    assert g.riccati.solutions == (X,)


def test_airy_is_full_sl2():
    g = classify_normal_form(X)
    assert g.tag == "full_sl2"
    assert not g.riccati.aborted
    assert g.dihedral_log_derivative is None
    assert g.primitive_degree is None


def test_dihedral_with_polar_certificate():
    r = 1 / X - RatFunc.make(3, 16) / X**2
    g = classify_normal_form(r)
    assert g.tag == "dihedral"
    assert g.dihedral_log_derivative == 1 / (2 * X)
    assert sym2_exponential_defect(r, g.dihedral_log_derivative).is_zero


def test_aborted_line_search_still_lands_in_dihedral():
    # u = +-sqrt(2) leaves Q, so the line hunt aborts; the product of the
    # two solutions is constant, which the pair-of-lines hunt certifies.
    g = classify_normal_form(RatFunc.const(2))
    assert g.tag == "dihedral"
    assert g.riccati.aborted
    assert g.dihedral_log_derivative == RatFunc.zero()
    assert any("infinity" in note for note in g.notes)


def test_tetrahedral_triangle_equation():
    g = classify_normal_form(triangle_equation(Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)))
    assert g.tag == "tetrahedral"
    assert g.primitive_degree == 4
    assert g.primitive_poly == Poly.one()
    assert g.primitive_theta == 1 / X + RatFunc.make(4, 3) / (X - 1)


def test_octahedral_triangle_equation():
    g = classify_normal_form(triangle_equation(Fraction(1, 2), Fraction(1, 3), Fraction(1, 4)))
    assert g.tag == "octahedral"
    assert g.primitive_degree == 6
    assert g.primitive_theta == RatFunc.make(3, 2) / X + 2 / (X - 1)


def test_icosahedral_triangle_equation():
    g = classify_normal_form(triangle_equation(Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)))
    assert g.tag == "icosahedral"
    assert g.primitive_degree == 12
    assert g.primitive_theta == 3 / X + 4 / (X - 1)


# -- certificate searches in isolation --------------------------------------


def test_dihedral_search_respects_structure():
    assert dihedral_certificate(RatFunc.make(X)) is None


def test_primitive_search_needs_tame_poles():
    assert primitive_certificate(1 / X**4) is None
    assert primitive_certificate(RatFunc.make(X)) is None


def test_primitive_search_skips_larger_groups():
    r = triangle_equation(Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))
    found = primitive_certificate(r)
    assert found is not None and found[0] == 6


# -- structural properties --------------------------------------------------


def test_every_tag_is_registered():
    for r in (RatFunc.zero(), RatFunc.one(), 1 + X**2, RatFunc.make(X)):
        assert classify_normal_form(r).tag in TAGS


def test_planted_lines_never_reach_the_later_hunts():
    rng = random.Random(7)
    for _ in range(15):
        coeffs = [Fraction(rng.choice([-2, -1, 1, 2])) for _ in range(rng.randint(1, 2))]
        u = RatFunc.make(Poly.from_coeffs(coeffs))
        for c in rng.sample(range(-2, 3), rng.randint(0, 1)):
            u = u + rng.choice([1, 2]) / (X - c)
        r = u.derivative() + u * u
        g = classify_normal_form(r)
        assert g.tag in ("projectively_trivial", "torus_finite", "torus_infinite", "borel_full")
        for w in g.riccati.solutions:
            assert riccati_defect(r, w).is_zero


def test_classification_is_deterministic():
    inputs = (
        RatFunc.zero(),
        RatFunc.one(),
        2 / X**2,
        1 / X - RatFunc.make(3, 16) / X**2,
        triangle_equation(Fraction(1, 2), Fraction(1, 3), Fraction(1, 3)),
    )
    for r in inputs:
        assert classify_normal_form(r) == classify_normal_form(r)
