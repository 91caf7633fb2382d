"""Dense univariate polynomials over Q.

Representation: an immutable tuple of Fraction coefficients indexed by
exponent, with no trailing zeros, so equality and hashing are structural.
The zero polynomial is the empty tuple and its degree is float ``-inf``,
which keeps the degree comparisons and the max/min bookkeeping in the
indicial-equation code free of special cases.

All arithmetic is exact; the ``-inf`` degree marker is the only float in
this layer. Division is division in Q[x] (``divmod``), and ``poly_gcd``
returns the monic generator, so canonical forms downstream are unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .rat import Rat

NEG_INF = float("-inf")

_Scalar = (int, Fraction)


@dataclass(frozen=True)
class Poly:
    coeffs: tuple[Rat, ...] = ()

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_coeffs(coeffs: Iterable[int | Rat]) -> "Poly":
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(tuple(cs))

    @staticmethod
    def const(c: int | Rat) -> "Poly":
        return Poly.from_coeffs([c])

    @staticmethod
    def monomial(exponent: int, coeff: int | Rat = 1) -> "Poly":
        if exponent < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return Poly.from_coeffs([0] * exponent + [coeff])

    @staticmethod
    def variable() -> "Poly":
        return Poly.monomial(1)

    @staticmethod
    def zero() -> "Poly":
        return Poly(())

    @staticmethod
    def one() -> "Poly":
        return Poly.const(1)

    @staticmethod
    def from_roots(roots: Iterable[int | Rat]) -> "Poly":
        p = Poly.one()
        for r in roots:
            p = p * Poly.from_coeffs([-Fraction(r), 1])
        return p

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Rat:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, exponent: int) -> Rat:
        if 0 <= exponent < len(self.coeffs):
            return self.coeffs[exponent]
        return Fraction(0)

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, _Scalar):
            return Poly.const(Fraction(other))
        return None

    def __add__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly.from_coeffs(
            [self.coeff(k) + o.coeff(k) for k in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "Poly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                if b:
                    out[i + j] += a * b
        return Poly.from_coeffs(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return Poly.zero(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = o.leading
        for k in range(dq, -1, -1):
            top = rem[k + len(o.coeffs) - 1]
            if top == 0:
                continue
            q = top / lead
            quo[k] = q
            for j, b in enumerate(o.coeffs):
                rem[k + j] -= q * b
        return Poly.from_coeffs(quo), Poly.from_coeffs(rem)

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def divexact(self, other) -> "Poly":
        """Quotient by an exact divisor; raises if the division leaves a rest."""
        q, r = divmod(self, other)
        if not r.is_zero:
            raise ValueError("division is not exact")
        return q

    # -- calculus and evaluation -------------------------------------------

    def derivative(self) -> "Poly":
        return Poly.from_coeffs(
            [k * c for k, c in enumerate(self.coeffs)][1:]
        )

    def eval(self, x: int | Rat) -> Rat:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly.const(c)
        return acc

    def shift(self, c: int | Rat) -> "Poly":
        """The polynomial p(x + c)."""
        return self.compose(Poly.from_coeffs([Fraction(c), 1]))

    def monic(self) -> "Poly":
        if self.is_zero:
            return self
        lead = self.leading
        if lead == 1:
            return self
        return Poly(tuple(c / lead for c in self.coeffs))

    def scale(self, c: int | Rat) -> "Poly":
        return self * Poly.const(c)

    def valuation_at(self, point: int | Rat) -> int:
        """Multiplicity of ``point`` as a root (0 when p(point) != 0).

        Raises on the zero polynomial, whose valuation is +infinity
        everywhere and never a sensible answer here.
        """
        if self.is_zero:
            raise ValueError("zero polynomial has infinite valuation")
        shifted = self.shift(point)
        v = 0
        while shifted.coeffs[v] == 0:
            v += 1
        return v

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            parts.append(f"{c}*x^{k}")
        return " + ".join(parts)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor via the Euclidean algorithm."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


def poly_lcm(a: Poly, b: Poly) -> Poly:
    if a.is_zero or b.is_zero:
        return Poly.zero()
    return (a * b).divexact(poly_gcd(a, b)).monic()
