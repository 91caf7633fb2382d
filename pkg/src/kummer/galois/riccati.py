"""Rational solutions of the Riccati equation u' + u^2 = r.

This is the log-derivative equation of y'' = r y, and a rational solution
is the certificate that the equation's symmetry group fixes a line. The
search follows the first case of Kovacic's method: at each pole of r and
at infinity the local behavior of a solution is pinned down to a finite
square-root tail plus one of two residue exponents, each global choice of
signs predicts the degree of a polynomial correction, and a candidate
survives only if that polynomial exists. Everything stays in Q; when the
local recipe demands an irrational square root the search aborts and says
so, which callers surface as an explicit gap rather than a wrong answer.

The count (exactly one, exactly two, or a one-parameter family) falls
out of the enumeration itself: each sign family carries a second-order
operator whose polynomial kernel lists that family's solutions, one per
kernel line, so a two-dimensional kernel is a pencil of solutions while
one-dimensional kernels contribute a single solution each. A separate
refinement, substituting u2 = u + 1/w and solving the resulting linear
equation for w, recovers the same count from any one known solution and
serves as an independent cross-check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..errors import VerificationError
from ..poles import PoleData, rational_poles, series_at_infinity
from ..poly import Poly
from ..rat import Rat, rat_sqrt
from ..ratfunc import RatFunc
from .linear import polynomial_solutions, rational_solutions


@dataclass(frozen=True)
class RiccatiAnalysis:
    """Outcome of the rational-solution search.

    ``count_class`` is one of "none", "one", "two", "infinite" and refers
    to rational solutions; ``solutions`` holds verified representatives
    (two of them when the class is two or infinite). ``aborted`` marks a
    search that could not certify absence because the local data left Q."""

    count_class: str
    solutions: tuple[RatFunc, ...]
    aborted: bool
    notes: tuple[str, ...]


def riccati_defect(r: RatFunc, u: RatFunc) -> RatFunc:
    """Exact defect of u against u' + u^2 = r."""
    return u.derivative() + u * u - r


@dataclass(frozen=True)
class _LocalData:
    """Square-root tail and the two exponent choices at one place."""

    sqrt_part: RatFunc
    alpha_plus: Rat
    alpha_minus: Rat
    residue_factor: RatFunc  # 1/(x - c) at a finite pole, zero at infinity

    def alpha(self, sign: int) -> Rat:
        return self.alpha_plus if sign > 0 else self.alpha_minus


class _CaseOneImpossible(Exception):
    """The pole structure rules out a solution outright (odd orders)."""


class _CaseOneAborted(Exception):
    def __init__(self, note: str):
        self.note = note


def _local_at_pole(pole: PoleData) -> _LocalData:
    c = pole.location
    residue_factor = RatFunc.make(1, Poly.from_roots([c]))
    t = lambda k: pole.principal.get(k, Fraction(0))
    if pole.order == 1:
        return _LocalData(RatFunc.zero(), Fraction(1), Fraction(1), residue_factor)
    if pole.order % 2 == 1:
        raise _CaseOneImpossible
    if pole.order == 2:
        root = rat_sqrt(1 + 4 * t(-2))
        if root is None:
            raise _CaseOneAborted(
                f"no rational certificate: irrational exponent at the pole x = {c}"
            )
        return _LocalData(
            RatFunc.zero(),
            Fraction(1 + root, 2),
            Fraction(1 - root, 2),
            residue_factor,
        )
    nu = pole.order // 2
    a: dict[int, Rat] = {}
    top = rat_sqrt(t(-2 * nu))
    if top is None:
        raise _CaseOneAborted(
            f"no rational certificate: irrational leading part at the pole x = {c}"
        )
    a[nu] = top
    for i in range(nu - 1, 1, -1):
        known = sum(
            (a[p] * a[nu + i - p] for p in range(i + 1, nu) if i + 1 <= nu + i - p <= nu - 1),
            Fraction(0),
        )
        a[i] = (t(-(nu + i)) - known) / (2 * a[nu])
    square_coeff = sum(
        (a[p] * a[nu + 1 - p] for p in range(2, nu + 1) if 2 <= nu + 1 - p <= nu),
        Fraction(0),
    )
    b = t(-(nu + 1)) - square_coeff
    sqrt_part = RatFunc.zero()
    for i, coeff in a.items():
        sqrt_part = sqrt_part + RatFunc.make(coeff, Poly.from_roots([c] * i))
    return _LocalData(
        sqrt_part,
        Fraction(b / a[nu] + nu, 2),
        Fraction(-b / a[nu] + nu, 2),
        residue_factor,
    )


def _local_at_infinity(r: RatFunc) -> _LocalData:
    order = r.order_at_infinity()
    if order > 2:
        return _LocalData(RatFunc.zero(), Fraction(0), Fraction(1), RatFunc.zero())
    if order == 2:
        _, coeffs = series_at_infinity(r, 1)
        root = rat_sqrt(1 + 4 * coeffs[0])
        if root is None:
            raise _CaseOneAborted(
                "no rational certificate: irrational exponent at infinity"
            )
        return _LocalData(
            RatFunc.zero(),
            Fraction(1 + root, 2),
            Fraction(1 - root, 2),
            RatFunc.zero(),
        )
    if order % 2 == 1:
        raise _CaseOneImpossible
    nu = -order // 2
    lead, coeffs = series_at_infinity(r, nu + 2)
    assert lead == 2 * nu
    c = lambda k: coeffs[2 * nu - k]
    top = rat_sqrt(coeffs[0])
    if top is None:
        raise _CaseOneAborted(
            "no rational certificate: irrational leading behavior at infinity"
        )
    a: dict[int, Rat] = {nu: top}
    for i in range(nu - 1, -1, -1):
        known = sum(
            (a[p] * a[nu + i - p] for p in range(i + 1, nu) if i + 1 <= nu + i - p <= nu - 1),
            Fraction(0),
        )
        a[i] = (c(nu + i) - known) / (2 * a[nu])
    square_coeff = sum(
        (a[p] * a[nu - 1 - p] for p in range(0, nu + 1) if 0 <= nu - 1 - p <= nu),
        Fraction(0),
    )
    b = c(nu - 1) - square_coeff
    sqrt_part = RatFunc.make(Poly.from_coeffs([a[i] for i in range(nu + 1)]))
    return _LocalData(
        sqrt_part,
        Fraction(b / a[nu] - nu, 2),
        Fraction(-b / a[nu] - nu, 2),
        RatFunc.zero(),
    )


@dataclass(frozen=True)
class _Family:
    """One surviving sign choice: its log-derivative part and the basis
    of polynomial corrections that complete it to actual solutions."""

    omega: RatFunc
    kernel: tuple[Poly, ...]


def _case_one_survey(r: RatFunc) -> tuple[list[_Family], bool, list[str]]:
    """Sign families with a nonzero polynomial kernel, in enumeration
    order (plus signs before minus at every place)."""
    try:
        locals_ = [_local_at_pole(p) for p in rational_poles(r)]
        locals_.append(_local_at_infinity(r))
    except _CaseOneImpossible:
        return [], False, []
    except _CaseOneAborted as stop:
        return [], True, [stop.note]
    families = []
    for signs in itertools.product((1, -1), repeat=len(locals_)):
        degree = locals_[-1].alpha(signs[-1]) - sum(
            loc.alpha(s) for loc, s in zip(locals_[:-1], signs[:-1])
        )
        if degree.denominator != 1 or degree < 0:
            continue
        omega = RatFunc.zero()
        for loc, s in zip(locals_, signs):
            omega = omega + s * loc.sqrt_part + loc.alpha(s) * loc.residue_factor
        ode = (
            omega.derivative() + omega * omega - r,
            2 * omega,
            RatFunc.one(),
        )
        kernel = polynomial_solutions(ode, max_degree=int(degree))
        if kernel:
            families.append(_Family(omega, tuple(kernel)))
    return families, False, []


def _family_members(r: RatFunc, family: _Family):
    """The verified solutions omega + p'/p, one per kernel element.

    Any nonzero kernel element works here, not only those of the degree
    the sign choice predicted: the defect of omega + p'/p is exactly the
    image of p under the family's operator, divided by p."""
    for p in family.kernel:
        u = family.omega + RatFunc.make(p.derivative(), p)
        if not riccati_defect(r, u).is_zero:
            raise VerificationError("enumeration produced a non-solution")
        yield u


def case_one_candidates(r: RatFunc) -> tuple[list[RatFunc], bool, list[str]]:
    """All verified solutions the sign enumeration can produce.

    Returns (candidates, aborted, notes); candidates are deduplicated in
    enumeration order, plus signs before minus at every place."""
    families, aborted, notes = _case_one_survey(r)
    found: dict = {}
    for family in families:
        for u in _family_members(r, family):
            found.setdefault((u.num.coeffs, u.den.coeffs), u)
    return list(found.values()), aborted, notes


def solution_count_refinement(
    r: RatFunc, u: RatFunc
) -> tuple[str, tuple[RatFunc, ...]]:
    """Complete the solution count starting from one verified solution.

    Returns ("one", ()), ("two", (u2,)), or ("infinite", (u2,)); the
    extra witness is itself verified. The decision is exhaustive: any
    further solution has the form u + 1/w with w' = 2uw + 1 rational, and
    that linear equation is solved in full."""
    if not riccati_defect(r, u).is_zero:
        raise ValueError("refinement needs a verified solution to start from")
    kernel = rational_solutions((-2 * u.derivative(), -2 * u, RatFunc.one()))
    kappas = []
    for b in kernel:
        kappa = b.derivative() - 2 * u * b
        if not kappa.is_constant:
            raise VerificationError("first integral of the refinement is not constant")
        kappas.append(kappa.as_constant())
    pivot = next((i for i, k in enumerate(kappas) if k != 0), None)
    if pivot is None:
        return "one", ()
    w = kernel[pivot] / kappas[pivot]
    u2 = u + 1 / w
    if not riccati_defect(r, u2).is_zero:
        raise VerificationError("refined second solution fails verification")
    if len(kernel) == 1:
        return "two", (u2,)
    return "infinite", (u2,)


_FAMILY_NOTE = "rational solutions form a family; two representatives shown"


def riccati_solve(r) -> RiccatiAnalysis:
    """Classify the rational solutions of u' + u^2 = r with witnesses.

    The count is read off the survey. Every solution belongs to the sign
    family matching its own local exponents, so the families are jointly
    exhaustive; within one family the solutions omega + p'/p for kernel
    elements p are distinct exactly when the p are non-proportional. A
    kernel of dimension two or more therefore spans a pencil of
    solutions, while all kernels one-dimensional leave the deduplicated
    members as the complete, necessarily short, list."""
    r = RatFunc.make(r)
    if r.is_zero:
        # No pole or infinity data to enumerate: the solutions are u = 0
        # and the simple-pole pencil, represented by u = 1/x.
        witnesses = (RatFunc.zero(), RatFunc.make(1, Poly.from_roots([Fraction(0)])))
        return RiccatiAnalysis("infinite", witnesses, False, (_FAMILY_NOTE,))
    families, aborted, notes = _case_one_survey(r)
    merged: dict = {}
    pencil = False
    for family in families:
        if len(family.kernel) >= 2:
            pencil = True
        for u in _family_members(r, family):
            merged.setdefault((u.num.coeffs, u.den.coeffs), u)
    witnesses = list(merged.values())
    if not witnesses:
        return RiccatiAnalysis("none", (), aborted, tuple(notes))
    if pencil:
        notes = [*notes, _FAMILY_NOTE]
        return RiccatiAnalysis("infinite", tuple(witnesses[:2]), aborted, tuple(notes))
    if len(witnesses) > 2:
        raise VerificationError(
            "one-dimensional sign families produced more than two solutions"
        )
    count = "one" if len(witnesses) == 1 else "two"
    return RiccatiAnalysis(count, tuple(witnesses), aborted, tuple(notes))
