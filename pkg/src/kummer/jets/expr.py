"""Canonical fractions of jet polynomials, with the derivations on them.

A ``JetExpr`` is num/den with the gcd divided out and the denominator
scaled to leading coefficient 1, so structural equality is mathematical
equality. The frame coordinate lam_e is invertible by design: it simply
appears in denominators, and the groupoid layer never evaluates at frames
with lam_e = 0.

Two derivations matter:

- :func:`total_derivative` is the jet-space derivative: it shifts frame
  coordinates up one slot and differentiates letters through the moving
  point (producing a lam_e factor by the chain rule);
- :func:`jet_partial` with index 0 is the partial along the base
  coordinate, which also advances letters (they are functions of the
  base point) but leaves higher frame coordinates alone. For index > 0
  it is the plain partial derivative in that frame coordinate.

Substitution is sequenced constants, letters, then frames, so replacing a
letter by an embedded rational function (which lives in the base frame
coordinate) composes correctly with a later numeric evaluation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from ..poly import Poly
from ..rat import Rat
from ..ratfunc import RatFunc
from .mpoly import MPoly, divide_exact, mpoly_gcd
from .symbols import CONST, FRAME, LETTER, JetSymbol, frame, letter, sort_key

ExprLike = Union["JetExpr", MPoly, int, Rat]


@dataclass(frozen=True)
class JetExpr:
    num: MPoly
    den: MPoly

    # -- construction ------------------------------------------------------

    @staticmethod
    def make(num: ExprLike, den: ExprLike = 1) -> "JetExpr":
        n = _as_mpoly_pair(num)
        d = _as_mpoly_pair(den)
        return _reduce(n[0] * d[1], n[1] * d[0])

    @staticmethod
    def zero() -> "JetExpr":
        return JetExpr(MPoly.zero(), MPoly.one())

    @staticmethod
    def one() -> "JetExpr":
        return JetExpr(MPoly.one(), MPoly.one())

    @staticmethod
    def const(c: int | Rat) -> "JetExpr":
        return JetExpr(MPoly.const(c), MPoly.one())

    @staticmethod
    def of_symbol(s: JetSymbol) -> "JetExpr":
        return JetExpr(MPoly.symbol(s), MPoly.one())

    @staticmethod
    def of_frame(index: int) -> "JetExpr":
        return JetExpr.of_symbol(frame(index))

    @staticmethod
    def of_letter(name: str, index: int = 0) -> "JetExpr":
        return JetExpr.of_symbol(letter(name, index))

    @staticmethod
    def from_ratfunc(f: RatFunc, s: JetSymbol | None = None) -> "JetExpr":
        """Embed a rational function, substituting ``s`` for its variable.

        Defaults to the base frame coordinate, which is the embedding the
        groupoid layer uses when a curvature becomes a jet expression.
        """
        s = s if s is not None else frame(0)
        return _reduce(MPoly.from_poly(f.num, s), MPoly.from_poly(f.den, s))

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @property
    def is_constant(self) -> bool:
        return self.num.is_constant and self.den.is_constant

    def as_constant(self) -> Rat:
        if not self.is_constant:
            raise ValueError("expression is not constant")
        if self.num.is_zero:
            return Fraction(0)
        return self.num.as_constant() / self.den.as_constant()

    def symbols(self) -> set:
        return self.num.symbols() | self.den.symbols()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "JetExpr | None":
        if isinstance(other, JetExpr):
            return other
        if isinstance(other, (MPoly, int, Fraction)):
            return JetExpr.make(other)
        return None

    def __add__(self, other) -> "JetExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _reduce(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "JetExpr":
        return JetExpr(-self.num, self.den)

    def __sub__(self, other) -> "JetExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "JetExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "JetExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _reduce(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "JetExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise ZeroDivisionError("division by the zero expression")
        return _reduce(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "JetExpr":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "JetExpr":
        if n == 0:
            return JetExpr.one()
        if n < 0:
            if self.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return _reduce(self.den**-n, self.num**-n)
        return _reduce(self.num**n, self.den**n)

    # -- derivations -------------------------------------------------------

    def partial(self, s: JetSymbol) -> "JetExpr":
        """Plain partial derivative in one symbol (no chain rule)."""
        n = self.num.partial(s) * self.den - self.num * self.den.partial(s)
        return _reduce(n, self.den * self.den)

    def derive(self, image: Callable[[JetSymbol], "JetExpr"]) -> "JetExpr":
        """Extend symbol -> image to a derivation of the whole fraction."""
        total = JetExpr.zero()
        for s in sorted(self.symbols(), key=sort_key):
            img = image(s)
            if img.is_zero:
                continue
            total = total + self.partial(s) * img
        return total

    # -- substitution and evaluation ---------------------------------------

    def substitute(self, mapping: dict) -> "JetExpr":
        """Replace symbols by expressions; constants, letters, then frames.

        Values may be JetExpr, MPoly, or scalars. The staged order means a
        letter image that mentions frame coordinates still sees any frame
        substitutions requested in the same call.
        """
        order = {CONST: 0, LETTER: 1, FRAME: 2}
        result = self
        for s in sorted(mapping, key=lambda t: (order[t.kind], sort_key(t))):
            result = result._substitute_one(s, mapping[s])
        return result

    def _substitute_one(self, s: JetSymbol, value) -> "JetExpr":
        target = value if isinstance(value, JetExpr) else JetExpr.make(value)
        if s not in self.symbols():
            return self
        return _sub_mpoly(self.num, s, target) / _sub_mpoly(self.den, s, target)

    def specialize_letter(self, name: str, f: RatFunc) -> "JetExpr":
        """Replace every derivative letter of ``name`` by the matching
        derivative of the rational function ``f`` in the base coordinate."""
        mapping = {}
        derivatives = {0: f}
        for s in sorted(self.symbols(), key=sort_key):
            if s.kind == LETTER and s.name == name:
                k = max(derivatives)
                while k < s.index:
                    derivatives[k + 1] = derivatives[k].derivative()
                    k += 1
                mapping[s] = JetExpr.from_ratfunc(derivatives[s.index])
        if not mapping:
            return self
        return self.substitute(mapping)

    def eval(self, values: dict) -> Rat:
        """Numeric evaluation; raises ZeroDivisionError on a vanishing
        denominator and KeyError on an unmapped symbol."""
        d = self.den.eval(values)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at the given point")
        return self.num.eval(values) / d


def _sub_mpoly(p: MPoly, s: JetSymbol, target: JetExpr) -> JetExpr:
    coeffs = p.coeffs_in(s)
    total = JetExpr.zero()
    for k, c in coeffs.items():
        total = total + JetExpr.make(c) * target**k
    return total


def _as_mpoly_pair(value: ExprLike) -> tuple[MPoly, MPoly]:
    if isinstance(value, JetExpr):
        return value.num, value.den
    if isinstance(value, MPoly):
        return value, MPoly.one()
    if isinstance(value, (int, Fraction)):
        return MPoly.const(value), MPoly.one()
    raise TypeError(f"cannot interpret {value!r} as a jet expression")


def _reduce(num: MPoly, den: MPoly) -> JetExpr:
    if den.is_zero:
        raise ZeroDivisionError("jet expression with zero denominator")
    if num.is_zero:
        return JetExpr(MPoly.zero(), MPoly.one())
    if not den.is_constant:
        g = mpoly_gcd(num, den)
        if not g.is_constant:
            num = divide_exact(num, g)
            den = divide_exact(den, g)
    lead = den.leading_coeff() if not den.is_zero else Fraction(1)
    if lead != 1:
        inv = 1 / lead
        num = num.scale(inv)
        den = den.scale(inv)
    return JetExpr(num, den)


# -- the two standard derivations ------------------------------------------


def _total_image(s: JetSymbol) -> JetExpr:
    if s.kind == FRAME:
        return JetExpr.of_frame(s.index + 1)
    if s.kind == LETTER:
        return JetExpr.of_letter(s.name, s.index + 1) * JetExpr.of_frame(1)
    return JetExpr.zero()


def total_derivative(e: JetExpr) -> JetExpr:
    """The jet-space total derivative (one more epsilon-derivative)."""
    return e.derive(_total_image)


def _base_image(s: JetSymbol) -> JetExpr:
    if s.kind == FRAME:
        return JetExpr.one() if s.index == 0 else JetExpr.zero()
    if s.kind == LETTER:
        return JetExpr.of_letter(s.name, s.index + 1)
    return JetExpr.zero()


def jet_partial(e: JetExpr, index: int) -> JetExpr:
    """Partial along the index-th frame coordinate.

    Index 0 is the base-point direction, so letters advance with it;
    higher indices are plain coordinate partials.
    """
    if index == 0:
        return e.derive(_base_image)
    return e.partial(frame(index))
