"""Self-check suite: the structural identities behind the classifier.

Every check here is an exact symbolic or exact-arithmetic statement, the
kind of fact the rest of the library silently relies on. The suite is
what the CLI's ``selfcheck`` subcommand runs: each check returns a
:class:`CheckResult` and :func:`verify_identities` never raises, so a
failure is reported rather than thrown.

The checks, in order: the Schwarzian composition cocycle; the action of
the third prolongation on the frame invariant; the bracket relations of
the parallel basis against a prolonged generator; the change of basis
between the parallel and normalized bases; the sl2 bracket table of the
normalized basis; the inclusion of affine symmetries into projective ones
in truncated-series form; and the curvature round trip through a
first-order reduction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .galois import apply_operator_series, series_solutions
from .groupoid import (
    CURVATURE_LETTER,
    AffineStructure,
    affine_operator,
    affine_to_projective,
    change_of_basis_symbolic,
    invariant_symbolic,
    lie_operator,
    parallel_basis_symbolic,
    riccati_residual,
    sl2_basis_symbolic,
)
from .jets.compose import Jet3, compose_jets, fdb3, jet_schwarzian
from .jets.expr import JetExpr, jet_partial
from .jets.fields import prolong
from .poly import Poly
from .ratfunc import RatFunc

__all__ = [
    "CheckResult",
    "check_affine_inclusion_series",
    "check_change_of_basis",
    "check_curvature_round_trip",
    "check_parallel_basis_brackets",
    "check_schwarzian_cocycle",
    "check_sl2_closure",
    "check_third_prolongation_invariant",
    "verify_identities",
]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def _letter(name: str, k: int) -> JetExpr:
    return JetExpr.of_letter(name, k)


def _formal_schwarzian(triple) -> JetExpr:
    d1, d2, d3 = triple
    return d3 / d1 - JetExpr.const(Fraction(3, 2)) * (d2 / d1) ** 2


def _random_jet(rng: random.Random, source: Fraction) -> Jet3:
    def rat() -> Fraction:
        return Fraction(rng.randint(-9, 9), rng.randint(1, 5))

    d1 = Fraction(0)
    while d1 == 0:
        d1 = rat()
    return Jet3(source, rat(), d1, rat(), rat())


def check_schwarzian_cocycle(samples: int = 100, seed: int = 1) -> CheckResult:
    """S(g after f) = (S(g) composed with f) f'^2 + S(f), formally and on
    random jets.

    The formal version treats the derivative triples as independent
    letters, with the g-letters standing for derivatives at the inner
    image point, which is exactly how the chain rule composes them.
    """
    name = "schwarzian_cocycle"
    f = tuple(_letter("f", k) for k in (1, 2, 3))
    g = tuple(_letter("g", k) for k in (1, 2, 3))
    composed = fdb3(g, f)
    symbolic = (
        _formal_schwarzian(composed)
        == _formal_schwarzian(g) * f[0] ** 2 + _formal_schwarzian(f)
    )
    if not symbolic:
        return CheckResult(name, False, "formal composition identity failed")
    rng = random.Random(seed)
    for _ in range(samples):
        inner = _random_jet(rng, Fraction(rng.randint(-3, 3)))
        outer = _random_jet(rng, inner.target)
        lhs = jet_schwarzian(compose_jets(outer, inner))
        rhs = jet_schwarzian(outer) * inner.d1**2 + jet_schwarzian(inner)
        if lhs != rhs:
            return CheckResult(name, False, f"random jet pair disagreed: {inner}, {outer}")
    return CheckResult(
        name, True, f"exact formal identity; {samples} random jet pairs agree"
    )


def check_third_prolongation_invariant() -> CheckResult:
    """The third prolongation of a generator differentiates the frame
    invariant into the third-order symmetry expression times the square
    of the first frame coordinate."""
    name = "third_prolongation_invariant"
    a = [_letter("a", k) for k in range(4)]
    R0 = _letter(CURVATURE_LETTER, 0)
    R1 = _letter(CURVATURE_LETTER, 1)
    lam_e = JetExpr.of_frame(1)
    lhs = prolong("a", 3).apply(invariant_symbolic())
    rhs = (a[3] + 2 * R0 * a[1] + R1 * a[0]) * lam_e**2
    if lhs != rhs:
        return CheckResult(name, False, "derivation of the invariant is off")
    return CheckResult(name, True, "exact jet-expression identity")


def check_parallel_basis_brackets() -> CheckResult:
    """Brackets of the parallel basis with a prolonged generator: two
    vanish, and the remaining obstruction is carried entirely by the top
    coefficient, which is the third-order symmetry expression times the
    cube of the first frame coordinate."""
    name = "parallel_basis_brackets"
    y0, y1, y2 = parallel_basis_symbolic()
    generator = prolong("a", 2)
    if not y1.bracket(generator).is_zero:
        return CheckResult(name, False, "second basis field does not commute")
    if not y2.bracket(generator).is_zero:
        return CheckResult(name, False, "third basis field does not commute")
    obstruction = y0.bracket(generator)
    a = [_letter("a", k) for k in range(4)]
    R0 = _letter(CURVATURE_LETTER, 0)
    R1 = _letter(CURVATURE_LETTER, 1)
    lam_e = JetExpr.of_frame(1)
    expected_top = (a[3] + 2 * R0 * a[1] + R1 * a[0]) * lam_e**3
    if (
        not obstruction.coeffs[0].is_zero
        or not obstruction.coeffs[1].is_zero
        or obstruction.coeffs[2] != expected_top
    ):
        return CheckResult(name, False, "obstruction coefficient mismatch")
    return CheckResult(name, True, "two zero brackets and the exact obstruction")


def check_change_of_basis() -> CheckResult:
    """The stated matrix carries the normalized basis to the parallel one,
    coefficient by coefficient."""
    name = "change_of_basis"
    matrix = change_of_basis_symbolic()
    parallel = parallel_basis_symbolic()
    normalized = sl2_basis_symbolic()
    for i in range(3):
        combo = None
        for j in range(3):
            piece = normalized[j].scale(matrix[i][j])
            combo = piece if combo is None else combo + piece
        if not (parallel[i] - combo).is_zero:
            return CheckResult(name, False, f"row {i} of the matrix fails")
    return CheckResult(name, True, "exact matrix identity between the bases")


def check_sl2_closure() -> CheckResult:
    """The normalized basis closes under brackets with the standard sl2
    structure constants."""
    name = "sl2_closure"
    e_minus, e_zero, e_plus = sl2_basis_symbolic()
    table = (
        (e_zero.bracket(e_plus), e_plus.scale(-1), "lowering"),
        (e_zero.bracket(e_minus), e_minus, "raising"),
        (e_plus.bracket(e_minus), e_zero.scale(2), "central"),
    )
    for got, want, label in table:
        if not (got - want).is_zero:
            return CheckResult(name, False, f"{label} bracket is off")
    return CheckResult(name, True, "all three structure constants exact")


def _random_affine_coefficient(rng: random.Random) -> RatFunc:
    value = RatFunc.make(
        Poly.from_coeffs([rng.choice([-2, -1, 1, 2]) for _ in range(rng.randrange(1, 3))])
    )
    for _ in range(rng.randrange(0, 3)):
        pole = rng.randint(-4, 4)
        residue = rng.choice([-2, -1, 1, 2])
        value = value + RatFunc.make(residue, Poly.from_coeffs([-pole, 1]))
    return value


def _ordinary_point(f: RatFunc) -> Fraction:
    point = Fraction(0)
    while f.den.eval(point) == 0:
        point += 1
    return point


def check_affine_inclusion_series(
    samples: int = 100, seed: int = 2, n_terms: int = 14
) -> CheckResult:
    """Every series solution of the affine symmetry operator also solves
    the projective symmetry operator of the induced curvature, to the
    order the truncation supports."""
    name = "affine_inclusion_series"
    rng = random.Random(seed)
    for trial in range(samples):
        affine = AffineStructure(_random_affine_coefficient(rng))
        projective = affine_to_projective(affine)
        point = _ordinary_point(projective.curvature)
        second = affine_operator(affine)
        third = lie_operator(projective)
        for series in series_solutions(second, point, n_terms).solutions:
            image = apply_operator_series(third.coefficients, point, series)
            if any(c != 0 for c in image):
                return CheckResult(
                    name, False, f"trial {trial}: inclusion fails at {point}"
                )
    return CheckResult(
        name,
        True,
        f"{samples} random reductions, series checked to {n_terms} terms",
    )


def check_curvature_round_trip(samples: int = 25, seed: int = 3) -> CheckResult:
    """A first-order witness u induces r = -2u and a curvature; the
    witness then solves the first-order equation of that curvature. Checked
    formally and on random rational witnesses."""
    name = "curvature_round_trip"
    u = _letter("u", 0)
    r = -2 * u
    curvature = jet_partial(r, 0) - r * r / 2
    residual = jet_partial(u, 0) + u * u + curvature / 2
    if not residual.is_zero:
        return CheckResult(name, False, "formal round trip does not close")
    rng = random.Random(seed)
    for _ in range(samples):
        witness = _random_affine_coefficient(rng)
        affine = AffineStructure(-2 * witness)
        projective = affine_to_projective(affine)
        if not riccati_residual(projective, witness).is_zero:
            return CheckResult(name, False, f"witness {witness} fails")
    return CheckResult(
        name, True, f"formal identity; {samples} random witnesses agree"
    )


_CHECKS = (
    check_schwarzian_cocycle,
    check_third_prolongation_invariant,
    check_parallel_basis_brackets,
    check_change_of_basis,
    check_sl2_closure,
    check_affine_inclusion_series,
    check_curvature_round_trip,
)


def verify_identities() -> tuple[CheckResult, ...]:
    """Run every check; failures and exceptions become failed results."""
    results = []
    for check in _CHECKS:
        try:
            results.append(check())
        except Exception as exc:  # the suite must report, not raise
            name = check.__name__.removeprefix("check_")
            results.append(
                CheckResult(name, False, f"raised {type(exc).__name__}: {exc}")
            )
    return tuple(results)
