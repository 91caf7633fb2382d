"""Symmetry type of y'' = r y over Q(x), after Kovacic.

The differential Galois group of a second-order equation sits inside
SL(2, C), and Kovacic's 1986 algorithm decides where by hunting for
log-derivative certificates of increasing degree: a rational solution of
the Riccati equation u' + u^2 = r (the group fixes a line), a rational
exponential solution of the symmetric square (the group permutes a pair
of lines), or an algebraic Riccati solution of degree 4, 6, or 12 (the
group is finite and primitive). When all hunts fail the group is the
whole of SL(2).

This implementation stays inside Q throughout. The first hunt can
therefore abort rather than fail (see :mod:`.riccati`); the later hunts
never need square roots that leave Q, because their candidate exponent
sets are filtered through integrality, so a verified certificate from
them is conclusive even after an abort. Every certificate returned here
has been checked by exact substitution.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import VerificationError
from ..linalg import nullspace
from ..poles import PoleData, partial_fractions, rational_poles, series_at_infinity
from ..poly import Poly
from ..rat import Rat, rat_sqrt
from ..ratfunc import RatFunc
from .linear import polynomial_solutions, rational_solutions
from .riccati import RiccatiAnalysis, riccati_solve

#: Classification tags, from smallest symmetry group to largest.
TAGS = (
    "projectively_trivial",
    "torus_finite",
    "torus_infinite",
    "borel_full",
    "dihedral",
    "tetrahedral",
    "octahedral",
    "icosahedral",
    "full_sl2",
)

_PRIMITIVE_TAGS = {4: "tetrahedral", 6: "octahedral", 12: "icosahedral"}


@dataclass(frozen=True)
class GaloisClass:
    """Classification outcome with its supporting certificates.

    ``riccati`` is the full first-hunt record (including abort notes) and
    ``sym2_basis`` the rational kernel of the symmetric square, kept for
    downstream reporting. The certificate fields are populated only for
    the tags they belong to: ``dihedral_log_derivative`` is the rational
    phi with z = exp(int phi) solving the symmetric square, and the
    ``primitive_*`` trio records the degree n in {4, 6, 12} together
    with the local part theta and polynomial factor of the algebraic
    certificate."""

    tag: str
    riccati: RiccatiAnalysis
    sym2_basis: tuple[RatFunc, ...]
    dihedral_log_derivative: RatFunc | None = None
    dihedral_finiteness: str | None = None
    primitive_degree: int | None = None
    primitive_theta: RatFunc | None = None
    primitive_poly: Poly | None = None
    notes: tuple[str, ...] = ()


def lie_irreducible(g: GaloisClass) -> bool:
    """No invariant line or plane in the adjoint action of the group.

    Reducible tags all fix something: a Borel image fixes the plane of
    upper-triangular elements, torus and dihedral images fix the Cartan
    line, and a trivial image fixes everything. The finite primitive
    groups and the full group act irreducibly."""
    return g.tag in ("tetrahedral", "octahedral", "icosahedral", "full_sl2")


def exp_integral_is_algebraic(u: RatFunc) -> bool:
    """Decide whether exp(integral of u) is algebraic over Q(x).

    In partial fractions the simple-pole part integrates to a sum of
    logarithms with rational residues, which exponentiates to a product
    of rational powers of linear factors: algebraic. Everything else (a
    polynomial part or a higher-order pole) contributes a genuinely
    transcendental exponential factor."""
    quotient, terms = partial_fractions(u)
    return quotient.is_zero and all(t.power == 1 for t in terms)


def symmetric_square_operator(r) -> tuple[RatFunc, ...]:
    """Monic operator annihilating products of two solutions of y'' = ry."""
    r = RatFunc.make(r)
    return (-2 * r.derivative(), -4 * r, RatFunc.zero(), RatFunc.one())


def symmetric_square_rational_basis(r) -> list[RatFunc]:
    return rational_solutions(symmetric_square_operator(r))


# -- pair-of-lines certificate ----------------------------------------------


def _exponent_pair_set(b: Rat) -> list[Fraction]:
    """{2, 2 +- 2 sqrt(1 + 4b)} intersected with the integers."""
    out = {Fraction(2)}
    s = rat_sqrt(1 + 4 * b)
    if s is not None:
        for e in (2 + 2 * s, 2 - 2 * s):
            if e.denominator == 1:
                out.add(e)
    return sorted(out)


def dihedral_certificate(r: RatFunc) -> RatFunc | None:
    """Rational phi with exp(int phi) solving the symmetric square.

    The search runs over a finite set of local exponents at each pole
    and at infinity; each choice prescribes the polar part theta and the
    degree of a polynomial correction P, and phi = theta + P'/P. A hit
    proves the group permutes a pair of lines (it preserves the product
    of the two corresponding solutions up to sign); the return value has
    been verified by substitution."""
    poles = rational_poles(r)
    per_pole: list[list[Fraction]] = []
    for pole in poles:
        if pole.order == 1:
            per_pole.append([Fraction(4)])
        elif pole.order == 2:
            per_pole.append(_exponent_pair_set(pole.principal[-2]))
        else:
            per_pole.append([Fraction(pole.order)])
    o = r.order_at_infinity()
    if o > 2:
        at_infinity = [Fraction(0), Fraction(2), Fraction(4)]
    elif o == 2:
        at_infinity = _exponent_pair_set(series_at_infinity(r, 1)[1][0])
    else:
        at_infinity = [Fraction(o)]
    for choice in itertools.product(*per_pole, at_infinity):
        *finite, e_inf = choice
        degree = Fraction(e_inf - sum(finite, Fraction(0)), 2)
        if degree.denominator != 1 or degree < 0:
            continue
        theta = RatFunc.zero()
        for pole, e in zip(poles, finite):
            theta = theta + RatFunc.make(
                Poly.const(Fraction(e, 2)), Poly.from_roots([pole.location])
            )
        dtheta = theta.derivative()
        operator = (
            dtheta.derivative() + 3 * theta * dtheta + theta**3
            - 4 * r * theta - 2 * r.derivative(),
            3 * theta * theta + 3 * dtheta - 4 * r,
            3 * theta,
            RatFunc.one(),
        )
        for p in polynomial_solutions(operator, max_degree=int(degree)):
            if p.degree != int(degree):
                continue
            phi = theta + RatFunc.make(p.derivative(), p)
            if not sym2_exponential_defect(r, phi).is_zero:
                raise VerificationError("pair-of-lines certificate fails substitution")
            return phi
    return None


def sym2_exponential_defect(r: RatFunc, phi: RatFunc) -> RatFunc:
    """Defect of exp(int phi) against the symmetric square, divided out."""
    dphi = phi.derivative()
    return (
        dphi.derivative() + 3 * phi * dphi + phi**3
        - 4 * r * phi - 2 * r.derivative()
    )


# -- finite primitive certificate -------------------------------------------


def _primitive_exponent_set(b: Rat, n: int) -> list[Fraction]:
    """{6 + (12k/n) sqrt(1 + 4b) : |k| <= n/2} intersected with the integers."""
    s = rat_sqrt(1 + 4 * b)
    if s is None:
        return [Fraction(6)]
    out = set()
    for k in range(-n // 2, n // 2 + 1):
        e = 6 + Fraction(12 * k, n) * s
        if e.denominator == 1:
            out.add(e)
    return sorted(out)


def _as_poly(f: RatFunc) -> Poly:
    if f.den.degree != 0:
        raise VerificationError("expected a polynomial in the certificate recurrence")
    return f.num.scale(Fraction(1, f.den.coeff(0)))


def _primitive_descend(
    p: Poly, n: int, S: Poly, dS: Poly, S_theta: Poly, S2_r: Poly
) -> Poly:
    """Bottom entry of the certificate recurrence; linear in ``p``.

    The chain starts at -p in degree n and steps down through
    polynomials; the candidate works exactly when the entry below
    degree 0 vanishes identically."""
    above = Poly.zero()
    current = p.scale(Fraction(-1))
    for i in range(n, -1, -1):
        below = (
            S.scale(Fraction(-1)) * current.derivative()
            + (dS.scale(Fraction(n - i)) - S_theta) * current
            - S2_r.scale(Fraction((n - i) * (i + 1))) * above
        )
        above, current = current, below
    return current


def _primitive_search(
    r: RatFunc, poles: list[PoleData], n: int
) -> tuple[RatFunc, Poly] | None:
    per_pole: list[list[Fraction]] = []
    for pole in poles:
        if pole.order == 1:
            per_pole.append([Fraction(12)])
        else:
            per_pole.append(_primitive_exponent_set(pole.principal[-2], n))
    if r.order_at_infinity() == 2:
        b_inf = series_at_infinity(r, 1)[1][0]
    else:
        b_inf = Fraction(0)
    at_infinity = _primitive_exponent_set(b_inf, n)
    S = Poly.from_roots([pole.location for pole in poles])
    dS = S.derivative()
    S2_r = _as_poly(S * S * r)
    for choice in itertools.product(*per_pole, at_infinity):
        *finite, e_inf = choice
        degree = Fraction(n, 12) * (e_inf - sum(finite, Fraction(0)))
        if degree.denominator != 1 or degree < 0:
            continue
        theta = RatFunc.zero()
        for pole, e in zip(poles, finite):
            theta = theta + RatFunc.make(
                Poly.const(Fraction(n, 12) * e), Poly.from_roots([pole.location])
            )
        S_theta = _as_poly(S * theta)
        d = int(degree)
        images = [
            _primitive_descend(Poly.monomial(j), n, S, dS, S_theta, S2_r)
            for j in range(d + 1)
        ]
        width = max((im.degree + 1 for im in images if not im.is_zero), default=0)
        rows = [
            [images[j].coeff(k) for j in range(d + 1)] for k in range(width)
        ]
        for vec in nullspace(rows, d + 1):
            p = Poly.from_coeffs(vec)
            if p.degree != d:
                continue
            if not _primitive_descend(p, n, S, dS, S_theta, S2_r).is_zero:
                raise VerificationError("primitive certificate fails the recurrence")
            return theta, p
    return None


def primitive_certificate(r: RatFunc) -> tuple[int, RatFunc, Poly] | None:
    """Algebraic log-derivative certificate of degree 4, 6, or 12.

    Only equations with poles of order at most 2 and decay of order at
    least 2 at infinity can carry a finite primitive group, so anything
    else short-circuits to None. The smallest degree wins: 4, 6, 12 tag
    the tetrahedral, octahedral, and icosahedral groups."""
    poles = rational_poles(r)
    if any(pole.order > 2 for pole in poles) or r.order_at_infinity() < 2:
        return None
    for n in (4, 6, 12):
        found = _primitive_search(r, poles, n)
        if found is not None:
            theta, p = found
            return n, theta, p
    return None


# -- the full decision procedure --------------------------------------------


def classify_normal_form(r) -> GaloisClass:
    """Classify the Galois group of y'' = r y, certificates included.

    The hunts run smallest group first, so the tag is the first one
    whose certificate exists; abort notes from the Riccati stage ride
    along in ``notes`` and mean the "none" verdict feeding the later
    stages was proved only over Q, not over C."""
    r = RatFunc.make(r)
    sym2 = tuple(symmetric_square_rational_basis(r))
    analysis = riccati_solve(r)
    scalar_by_count = analysis.count_class == "infinite"
    scalar_by_sym2 = len(sym2) == 3
    if scalar_by_count != scalar_by_sym2:
        raise VerificationError(
            "scalar-symmetry cross-check failed: Riccati family "
            f"{analysis.count} vs symmetric-square dimension {len(sym2)}"
        )
    if scalar_by_count:
        return GaloisClass("projectively_trivial", analysis, sym2, notes=analysis.notes)
    if analysis.count_class == "two":
        algebraic = [exp_integral_is_algebraic(u) for u in analysis.solutions]
        if algebraic[0] != algebraic[1]:
            raise VerificationError(
                "the two line certificates disagree about algebraicity"
            )
        tag = "torus_finite" if algebraic[0] else "torus_infinite"
        return GaloisClass(tag, analysis, sym2, notes=analysis.notes)
    if analysis.count_class == "one":
        return GaloisClass("borel_full", analysis, sym2, notes=analysis.notes)
    phi = dihedral_certificate(r)
    if phi is not None:
        return GaloisClass(
            "dihedral",
            analysis,
            sym2,
            dihedral_log_derivative=phi,
            dihedral_finiteness="undetermined",
            notes=analysis.notes,
        )
    primitive = primitive_certificate(r)
    if primitive is not None:
        n, theta, p = primitive
        return GaloisClass(
            _PRIMITIVE_TAGS[n],
            analysis,
            sym2,
            primitive_degree=n,
            primitive_theta=theta,
            primitive_poly=p,
            notes=analysis.notes,
        )
    failures = (
        "no rational solution of the log-derivative equation",
        "no rational pair-of-lines certificate",
        "no algebraic certificate of degree 4, 6, or 12",
    )
    return GaloisClass("full_sl2", analysis, sym2, notes=analysis.notes + failures)
