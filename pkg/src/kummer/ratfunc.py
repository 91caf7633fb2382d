"""Rational functions over Q in one variable, in canonical form.

Invariant: ``num`` and ``den`` are coprime and ``den`` is monic and
nonzero; zero is ``0/1``. Construction goes through :meth:`RatFunc.make`,
which enforces the invariant, and the arithmetic operators preserve it,
so ``==`` is both structural and mathematical equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import Poly, poly_gcd
from .rat import Rat

_Scalar = (int, Fraction)

RatFuncLike = Union["RatFunc", Poly, Rat, int]


@dataclass(frozen=True)
class RatFunc:
    num: Poly
    den: Poly

    # -- construction ------------------------------------------------------

    @staticmethod
    def make(num: RatFuncLike, den: RatFuncLike = 1) -> "RatFunc":
        n = _as_ratfunc(num)
        d = _as_ratfunc(den)
        if d.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        return _reduce(n.num * d.den, n.den * d.num)

    @staticmethod
    def zero() -> "RatFunc":
        return RatFunc(Poly.zero(), Poly.one())

    @staticmethod
    def one() -> "RatFunc":
        return RatFunc(Poly.one(), Poly.one())

    @staticmethod
    def variable() -> "RatFunc":
        return RatFunc(Poly.variable(), Poly.one())

    @staticmethod
    def const(c: int | Rat) -> "RatFunc":
        return RatFunc(Poly.const(c), Poly.one())

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def as_constant(self) -> Rat:
        if not self.is_constant:
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    @property
    def is_polynomial(self) -> bool:
        return self.den.is_constant

    def as_polynomial(self) -> Poly:
        if not self.is_polynomial:
            raise ValueError("not a polynomial")
        return self.num

    def order_at_infinity(self) -> int:
        """Vanishing order at infinity: den degree minus num degree.

        Positive means the function decays at infinity, negative that it
        grows; the zero function has no sensible order and raises.
        """
        if self.is_zero:
            raise ValueError("zero function has no order at infinity")
        return int(self.den.degree - self.num.degree)

    def has_pole_at(self, point: int | Rat) -> bool:
        return self.den.eval(point) == 0

    def eval(self, point: int | Rat) -> Rat:
        d = self.den.eval(point)
        if d == 0:
            raise ZeroDivisionError(f"pole at {point}")
        return self.num.eval(point) / d

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _reduce(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return _reduce(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero function")
        return _reduce(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RatFunc":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "RatFunc":
        if n == 0:
            return RatFunc.one()
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den, self.num).__pow__(-n)._renormalize()
        return _reduce(self.num**n, self.den**n)

    def _renormalize(self) -> "RatFunc":
        return _reduce(self.num, self.den)

    def derivative(self) -> "RatFunc":
        n = self.num.derivative() * self.den - self.num * self.den.derivative()
        return _reduce(n, self.den * self.den)

    def compose(self, inner: "RatFunc") -> "RatFunc":
        """The composition self(inner(x)).

        Raises ZeroDivisionError when inner is a constant sitting on a
        pole of self, the one case where the formula has no value."""
        n = _poly_of_ratfunc(self.num, inner)
        d = _poly_of_ratfunc(self.den, inner)
        if d.is_zero:
            raise ZeroDivisionError("composition lands in a pole")
        return RatFunc.make(n, d)

    def __str__(self) -> str:
        if self.den.is_constant:
            return str(self.num)
        return f"({self.num})/({self.den})"


def _poly_of_ratfunc(p: Poly, inner: RatFunc) -> RatFunc:
    total = RatFunc.zero()
    for c in reversed(p.coeffs):
        total = total * inner + RatFunc.const(c)
    return total


def _as_ratfunc(value: RatFuncLike) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc(value, Poly.one())
    if isinstance(value, _Scalar):
        return RatFunc(Poly.const(Fraction(value)), Poly.one())
    raise TypeError(f"cannot interpret {value!r} as a rational function")


def _coerce(value) -> RatFunc | None:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, (Poly, *_Scalar)):
        return _as_ratfunc(value)
    return None


def _reduce(num: Poly, den: Poly) -> RatFunc:
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero:
        return RatFunc(Poly.zero(), Poly.one())
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num.divexact(g)
        den = den.divexact(g)
    lead = den.leading
    if lead != 1:
        num = Poly(tuple(c / lead for c in num.coeffs))
        den = den.monic()
    return RatFunc(num, den)
