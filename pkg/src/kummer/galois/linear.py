"""Exact solution spaces of linear ODEs with rational coefficients.

An operator is a sequence of rational-function coefficients, index i
multiplying the i-th derivative; the top coefficient must be nonzero.
Everything here is exact over Q: polynomial and rational kernels come
from indicial analysis at the finite singular points and at infinity
followed by an integer nullspace computation, and every solution found
is re-verified by substitution before it is returned.

The certification boundary is that finite singular points must sit at
rational locations; an irrational singularity raises
:class:`~kummer.errors.UnsupportedPolesError` rather than risking a
silently incomplete kernel.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import VerificationError
from ..linalg import nullspace, rref
from ..poles import linear_factors, series_at
from ..poly import Poly, poly_lcm
from ..rat import Rat
from ..ratfunc import RatFunc
from ..roots import integer_roots
from ..series import s_add, s_derivative, s_mul

Operator = tuple[RatFunc, ...]


def normalize_operator(coeffs) -> Operator:
    """Coerce to rational functions and strip zero top coefficients."""
    out = [RatFunc.make(c) for c in coeffs]
    while out and out[-1].is_zero:
        out.pop()
    if not out:
        raise ValueError("the zero operator has no well-defined order")
    return tuple(out)


def operator_apply(coeffs, f) -> RatFunc:
    coeffs = normalize_operator(coeffs)
    f = RatFunc.make(f)
    total = RatFunc.zero()
    g = f
    for c in coeffs:
        if not c.is_zero:
            total = total + c * g
        g = g.derivative()
    return total


def compose_operators(outer, inner) -> Operator:
    """Coefficients of the product operator: outer applied after inner."""
    outer = normalize_operator(outer)
    inner = normalize_operator(inner)
    n1 = len(outer) - 1
    result = [RatFunc.zero() for _ in range(n1 + len(inner))]
    derivs: dict[tuple[int, int], RatFunc] = {}
    for j, b in enumerate(inner):
        derivs[(j, 0)] = b
        for k in range(1, n1 + 1):
            derivs[(j, k)] = derivs[(j, k - 1)].derivative()
    for i, a in enumerate(outer):
        if a.is_zero:
            continue
        for j in range(len(inner)):
            for k in range(i + 1):
                result[j + k] = result[j + k] + a * comb(i, k) * derivs[(j, i - k)]
    return tuple(result)


# -- indicial analysis ------------------------------------------------------


def _falling_factorial_poly(order: int) -> Poly:
    """The polynomial e(e-1)...(e-order+1) in the exponent variable."""
    if order == 0:
        return Poly.one()
    return Poly.from_roots(range(order))


def _clear_denominators(coeffs: Operator) -> list[Poly]:
    den = Poly.one()
    for c in coeffs:
        if not c.is_zero:
            den = poly_lcm(den, c.den)
    return [(c * den).as_polynomial() for c in coeffs]


def indicial_at(polys: list[Poly], point: Rat) -> Poly:
    """Indicial polynomial at a finite point, in the exponent variable.

    Its integer roots are the only possible valuations of a nonzero
    rational (or formal Laurent) solution at that point."""
    shifted = [p.shift(point) for p in polys]
    slope = None
    for i, q in enumerate(shifted):
        if q.is_zero:
            continue
        v = q.valuation_at(Fraction(0)) - i
        if slope is None or v < slope:
            slope = v
    ind = Poly.zero()
    for i, q in enumerate(shifted):
        if q.is_zero:
            continue
        v = q.valuation_at(Fraction(0))
        if v - i == slope:
            ind = ind + _falling_factorial_poly(i).scale(q.coeff(v))
    return ind


def indicial_at_infinity(polys: list[Poly]) -> Poly:
    """Indicial polynomial at infinity, in the degree variable.

    Its integer roots are the only possible degrees (valuations at
    infinity, negated) of a nonzero polynomial solution."""
    slope = None
    for i, p in enumerate(polys):
        if p.is_zero:
            continue
        v = int(p.degree) - i
        if slope is None or v > slope:
            slope = v
    ind = Poly.zero()
    for i, p in enumerate(polys):
        if p.is_zero:
            continue
        if int(p.degree) - i == slope:
            ind = ind + _falling_factorial_poly(i).scale(p.leading)
    return ind


# -- polynomial and rational kernels ---------------------------------------


def _canonical_span_basis(vectors: list[list[Rat]]) -> list[list[Rat]]:
    """Canonical basis of the span of the given coefficient vectors.

    Each output vector has a unit coefficient at its top degree, zeros at
    the other vectors' top degrees, and the list is ordered by ascending
    top degree; the result depends only on the span."""
    if not vectors:
        return []
    reduced, pivots = rref([list(reversed(v)) for v in vectors])
    out = [list(reversed(reduced[i])) for i in range(len(pivots))]
    out.reverse()
    return out


def polynomial_solutions(coeffs, max_degree: int | None = None) -> list[Poly]:
    """Basis of the polynomial kernel, canonically ordered.

    With ``max_degree`` unset the degree bound comes from the indicial
    polynomial at infinity; pass a bound explicitly to restrict the
    search space (the algebraic-subgroup recipes know their degree).

    The coefficient system is banded: the monomial x^k lands on powers
    k+lo through k+hi, and the weight of c_k in the equation for power
    k+hi is the indicial value at k. Sweeping k downward therefore pins
    each coefficient from the ones above it, except at integer indicial
    roots, which open free parameters; the pivotless equations close
    over those parameters as a small residual system. The work stays
    linear in the degree bound where a dense kernel computation would
    be cubic, which matters when a sign enumeration predicts a large
    correction degree only to find nothing there."""
    coeffs = normalize_operator(coeffs)
    if len(coeffs) == 1:
        return []
    polys = _clear_denominators(coeffs)
    if max_degree is None:
        candidates = [d for d in integer_roots(indicial_at_infinity(polys)) if d >= 0]
        if not candidates:
            return []
        max_degree = max(candidates)
    if max_degree < 0:
        return []
    shifts = {
        j - i
        for i, p in enumerate(polys)
        for j, a in enumerate(p.coeffs)
        if a != 0
    }
    lo, hi = min(shifts), max(shifts)

    def weight(k: int, shift: int) -> Fraction:
        total = Fraction(0)
        for i, p in enumerate(polys):
            a = p.coeff(shift + i)
            if a:
                total += _falling_value(k, i) * a
        return total

    # combos[k] expresses c_k over the free parameters found so far;
    # shorter vectors are implicitly zero-padded on the right.
    combos: list[list[Fraction]] = [[] for _ in range(max_degree + 1)]
    n_params = 0
    residual: list[list[Fraction]] = []

    def row_for(power: int, degrees) -> tuple[list[Fraction], bool]:
        acc = [Fraction(0)] * n_params
        hit = False
        for j in degrees:
            w = weight(j, power - j)
            if w:
                hit = True
                for p_idx, val in enumerate(combos[j]):
                    if val:
                        acc[p_idx] += w * val
        return acc, hit

    for k in range(max_degree, -1, -1):
        acc, _ = row_for(
            k + hi, range(k + 1, min(max_degree, k + hi - lo) + 1)
        )
        pivot = weight(k, hi)
        if pivot != 0:
            combos[k] = [-a / pivot for a in acc]
        else:
            residual.append(acc)
            combos[k] = [Fraction(0)] * n_params + [Fraction(1)]
            n_params += 1
    for m in range(max(hi, 0)):
        acc, hit = row_for(m, range(max(0, m - hi), min(max_degree, m - lo) + 1))
        if hit:
            residual.append(acc)
    if n_params == 0:
        return []
    rows = [r + [Fraction(0)] * (n_params - len(r)) for r in residual]
    kernel = []
    for t in nullspace(rows, ncols=n_params):
        kernel.append(
            [
                sum(
                    (val * t[p_idx] for p_idx, val in enumerate(combos[k]) if val),
                    Fraction(0),
                )
                for k in range(max_degree + 1)
            ]
        )
    solutions = []
    for vec in _canonical_span_basis(kernel):
        z = Poly.from_coeffs(vec)
        if not operator_apply(coeffs, z).is_zero:
            raise VerificationError("polynomial kernel candidate fails substitution")
        solutions.append(z)
    return solutions


def _universal_denominator(coeffs: Operator, polys: list[Poly]) -> Poly | None:
    """Shared denominator bound for rational solutions, or None when the
    indicial data already rules out a nonzero rational solution."""
    U = Poly.one()
    for point, _mult in linear_factors(polys[-1]):
        exponents = integer_roots(indicial_at(polys, point))
        if not exponents:
            return None
        lowest = min(exponents)
        if lowest < 0:
            U = U * Poly.from_roots([point] * (-lowest))
    return U


def rational_solutions(coeffs) -> list[RatFunc]:
    """Basis of the rational-function kernel, canonically ordered.

    Raises UnsupportedPolesError when a finite singular point is not
    rational, the one configuration this solver does not certify."""
    coeffs = normalize_operator(coeffs)
    if len(coeffs) == 1:
        return []
    polys = _clear_denominators(coeffs)
    U = _universal_denominator(coeffs, polys)
    if U is None:
        return []
    if U.degree == 0:
        shifted = coeffs
    else:
        g = RatFunc.make(1, U)
        bernoulli = [RatFunc.one()]
        for _ in range(len(coeffs) - 1):
            g = g.derivative()
            bernoulli.append(U * g)
        shifted = []
        for k in range(len(coeffs)):
            d_k = RatFunc.zero()
            for i in range(k, len(coeffs)):
                d_k = d_k + comb(i, k) * coeffs[i] * bernoulli[i - k]
            shifted.append(d_k)
    solutions = []
    for z in polynomial_solutions(shifted):
        y = RatFunc.make(z, U)
        if not operator_apply(coeffs, y).is_zero:
            raise VerificationError("rational kernel candidate fails substitution")
        solutions.append(y)
    return solutions


# -- series solutions -------------------------------------------------------


def series_solutions(coeffs, point: Rat, n_terms: int) -> list[list[Rat]]:
    """Fundamental system of Taylor solutions at an ordinary point.

    Solution j has coefficients delta_{kj} for k below the order, then
    the recurrence takes over; each returned list has ``n_terms``
    coefficients. Raises ValueError at a singular point."""
    coeffs = normalize_operator(coeffs)
    order = len(coeffs) - 1
    if order == 0:
        raise ValueError("order-zero operator has no solution basis")
    point = Fraction(point)
    for c in coeffs:
        if c.has_pole_at(point):
            raise ValueError(f"coefficient pole at {point}: not an ordinary point")
    if coeffs[-1].eval(point) == 0:
        raise ValueError(f"leading coefficient vanishes at {point}: singular point")
    if n_terms < order:
        raise ValueError("need at least as many terms as the operator order")
    expansions = [series_at(c, point, n_terms) for c in coeffs]
    top = expansions[-1][0]
    basis = []
    for j in range(order):
        a = [Fraction(0)] * n_terms
        a[j] = Fraction(1)
        for N in range(n_terms - order):
            total = Fraction(0)
            for i, q in enumerate(expansions):
                for m in range(N + 1):
                    if q[m] == 0:
                        continue
                    k = N - m + i
                    if i == order and m == 0:
                        continue
                    total += q[m] * _falling_value(k, i) * a[k]
            a[N + order] = -total / (top * _falling_value(N + order, order))
        basis.append(a)
    return basis


def _falling_value(k: int, i: int) -> Fraction:
    out = Fraction(1)
    for step in range(i):
        out *= k - step
    return out


def apply_operator_series(coeffs, point: Rat, series: list[Rat]) -> list[Rat]:
    """The operator applied to a truncated Taylor series at a point where
    every coefficient is finite; the result loses one term per derivative
    order, which is all the truncation can support."""
    coeffs = normalize_operator(coeffs)
    order = len(coeffs) - 1
    point = Fraction(point)
    for c in coeffs:
        if c.has_pole_at(point):
            raise ValueError(f"coefficient pole at {point}")
    out_len = len(series) - order
    if out_len <= 0:
        raise ValueError("series too short for the operator order")
    total = [Fraction(0)] * out_len
    g = list(series)
    for c in coeffs:
        expansion = series_at(c, point, out_len - 1)
        total = s_add(total, s_mul(expansion, g[:out_len]))
        g = s_derivative(g)
    return total
