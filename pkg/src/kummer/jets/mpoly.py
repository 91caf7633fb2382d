"""Sparse multivariate polynomials over Q in jet symbols.

Representation: a polynomial is a sorted tuple of (monomial, coefficient)
pairs; a monomial is a sorted tuple of (symbol, exponent) pairs with
positive exponents. Both sorts follow :func:`symbols.sort_key`, so equal
polynomials are equal tuples and equality and hashing are structural.

The gcd is a primitive polynomial-remainder sequence recursing on the
largest symbol present. The expressions that arise in the identity checks
have a handful of symbols and a few dozen terms, so the implementation
favors being obviously correct over asymptotic cleverness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..poly import Poly, poly_gcd
from ..rat import Rat
from .symbols import JetSymbol, sort_key

Mono = tuple  # tuple[tuple[JetSymbol, int], ...]

_EMPTY: Mono = ()


def _single(mono: Mono, c: Fraction) -> "MPoly":
    return MPoly(((mono, c),))


def _mono_key(mono: Mono):
    return tuple((sort_key(s), e) for s, e in mono)


def _mono_mul(a: Mono, b: Mono) -> Mono:
    if not a:
        return b
    if not b:
        return a
    merged: dict[JetSymbol, int] = {}
    for s, e in a:
        merged[s] = merged.get(s, 0) + e
    for s, e in b:
        merged[s] = merged.get(s, 0) + e
    return tuple(sorted(merged.items(), key=lambda p: sort_key(p[0])))


@dataclass(frozen=True)
class MPoly:
    terms: tuple = ()

    # -- construction ------------------------------------------------------

    @staticmethod
    def from_dict(d: dict) -> "MPoly":
        # canonicalize each monomial: sorted pairs, positive exponents only
        merged: dict = {}
        for mono, c in d.items():
            canon = tuple(
                sorted(
                    ((s, e) for s, e in mono if e != 0),
                    key=lambda p: sort_key(p[0]),
                )
            )
            merged[canon] = merged.get(canon, Fraction(0)) + Fraction(c)
        items = [(m, c) for m, c in merged.items() if c != 0]
        items.sort(key=lambda t: _mono_key(t[0]))
        return MPoly(tuple(items))

    @staticmethod
    def zero() -> "MPoly":
        return MPoly(())

    @staticmethod
    def one() -> "MPoly":
        return MPoly.const(1)

    @staticmethod
    def const(c: int | Rat) -> "MPoly":
        c = Fraction(c)
        if c == 0:
            return MPoly(())
        return MPoly(((_EMPTY, c),))

    @staticmethod
    def symbol(s: JetSymbol) -> "MPoly":
        return _single(((s, 1),), Fraction(1))

    @staticmethod
    def from_poly(p: Poly, s: JetSymbol) -> "MPoly":
        d = {}
        for k, c in enumerate(p.coeffs):
            if c != 0:
                mono = _EMPTY if k == 0 else ((s, k),)
                d[mono] = c
        return MPoly.from_dict(d)

    # -- queries -----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not self.terms[0][0])

    def as_constant(self) -> Rat:
        if self.is_zero:
            return Fraction(0)
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return self.terms[0][1]

    def symbols(self) -> set:
        out = set()
        for mono, _ in self.terms:
            for s, _e in mono:
                out.add(s)
        return out

    def max_symbol(self) -> JetSymbol | None:
        best = None
        for mono, _ in self.terms:
            for s, _e in mono:
                if best is None or sort_key(s) > sort_key(best):
                    best = s
        return best

    def degree_in(self, s: JetSymbol) -> int:
        deg = 0
        for mono, _ in self.terms:
            for sym, e in mono:
                if sym == s:
                    deg = max(deg, e)
        return deg

    def leading_coeff(self) -> Rat:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[-1][1]

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "MPoly | None":
        if isinstance(other, MPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(other)
        return None

    def __add__(self, other) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = dict(self.terms)
        for mono, c in o.terms:
            d[mono] = d.get(mono, Fraction(0)) + c
        return MPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "MPoly":
        return MPoly(tuple((m, -c) for m, c in self.terms))

    def __sub__(self, other) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> "MPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d: dict = {}
        for m1, c1 in self.terms:
            for m2, c2 in o.terms:
                mono = _mono_mul(m1, m2)
                d[mono] = d.get(mono, Fraction(0)) + c1 * c2
        return MPoly.from_dict(d)

    __rmul__ = __mul__

    def scale(self, c: int | Rat) -> "MPoly":
        c = Fraction(c)
        if c == 0:
            return MPoly.zero()
        return MPoly(tuple((m, k * c) for m, k in self.terms))

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = MPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def monic_normalized(self) -> "MPoly":
        """Scaled so the leading coefficient (in term order) is 1."""
        if self.is_zero:
            return self
        lead = self.leading_coeff()
        if lead == 1:
            return self
        return self.scale(1 / lead)

    # -- calculus ----------------------------------------------------------

    def partial(self, s: JetSymbol) -> "MPoly":
        d: dict = {}
        for mono, c in self.terms:
            for i, (sym, e) in enumerate(mono):
                if sym != s:
                    continue
                rest = mono[:i] + mono[i + 1 :]
                new_mono = rest if e == 1 else _mono_mul(rest, ((s, e - 1),))
                d[new_mono] = d.get(new_mono, Fraction(0)) + c * e
                break
        return MPoly.from_dict(d)

    # -- structure in one symbol -------------------------------------------

    def coeffs_in(self, s: JetSymbol) -> dict:
        """Decomposition sum_k coeff_k * s^k; values are s-free MPolys."""
        out: dict[int, dict] = {}
        for mono, c in self.terms:
            e_s = 0
            rest = []
            for sym, e in mono:
                if sym == s:
                    e_s = e
                else:
                    rest.append((sym, e))
            bucket = out.setdefault(e_s, {})
            key = tuple(rest)
            bucket[key] = bucket.get(key, Fraction(0)) + c
        return {k: MPoly.from_dict(v) for k, v in out.items()}

    @staticmethod
    def from_coeffs_in(s: JetSymbol, coeffs: dict) -> "MPoly":
        total = MPoly.zero()
        for k, p in coeffs.items():
            power = MPoly.one() if k == 0 else _single(((s, k),), Fraction(1))
            total = total + p * power
        return total

    # -- substitution ------------------------------------------------------

    def substitute(self, mapping: dict) -> "MPoly":
        """Polynomial substitution symbol -> MPoly or scalar."""
        cache: dict = {}
        out = MPoly.zero()
        for mono, c in self.terms:
            term = MPoly.const(c)
            for s, e in mono:
                target = mapping.get(s)
                if target is None:
                    base = MPoly.symbol(s)
                elif isinstance(target, MPoly):
                    base = target
                else:
                    base = MPoly.const(Fraction(target))
                key = (s, e)
                if key not in cache:
                    cache[key] = base**e
                term = term * cache[key]
            out = out + term
        return out

    def eval(self, values: dict) -> Rat:
        """Full evaluation; every symbol present must be mapped."""
        total = Fraction(0)
        for mono, c in self.terms:
            prod = c
            for s, e in mono:
                if s not in values:
                    raise KeyError(f"no value for symbol {s}")
                prod *= Fraction(values[s]) ** e
            total += prod
        return total


# -- gcd machinery ---------------------------------------------------------


def _dense_in(p: MPoly, v: JetSymbol) -> list[MPoly]:
    coeffs = p.coeffs_in(v)
    out = [MPoly.zero()] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return out


def _trim(dense: list[MPoly]) -> list[MPoly]:
    while dense and dense[-1].is_zero:
        dense.pop()
    return dense


def _prem(a: list[MPoly], b: list[MPoly]) -> list[MPoly]:
    """Pseudo-remainder of dense coefficient lists in the main symbol."""
    r = list(a)
    lead_b = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db:
        top = r[-1]
        r = [lead_b * c for c in r]
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] = r[shift + j] - top * b[j]
        assert r[-1].is_zero
        r.pop()
        _trim(r)
        if not r:
            break
    return r


def _content(coeff_list: list[MPoly]) -> MPoly:
    acc = MPoly.zero()
    for c in coeff_list:
        acc = _gcd(acc, c)
        if acc.is_constant and not acc.is_zero:
            return MPoly.one()
    return acc


def _primitive(dense: list[MPoly]) -> list[MPoly]:
    cont = _content(dense)
    if cont.is_constant:
        if cont.as_constant() == 1:
            return dense
        inv = 1 / cont.as_constant()
        return [c.scale(inv) for c in dense]
    return [divide_exact(c, cont) for c in dense]


def _univariate(p: MPoly, v: JetSymbol) -> Poly:
    coeffs = p.coeffs_in(v)
    dense = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        dense[k] = c.as_constant()
    return Poly.from_coeffs(dense)


def _gcd(a: MPoly, b: MPoly) -> MPoly:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.is_constant or b.is_constant:
        return MPoly.one()
    syms_a = a.symbols()
    syms_b = b.symbols()
    if len(syms_a) == 1 and syms_a == syms_b:
        # both univariate in the same symbol: dense Euclid is much faster
        # than the pseudo-remainder sequence
        (v,) = syms_a
        return MPoly.from_poly(poly_gcd(_univariate(a, v), _univariate(b, v)), v)
    sa = a.max_symbol()
    sb = b.max_symbol()
    v = sa if sort_key(sa) >= sort_key(sb) else sb
    if v not in a.symbols():
        return _gcd(a, _content(_dense_in(b, v)))
    if v not in b.symbols():
        return _gcd(_content(_dense_in(a, v)), b)
    da = _dense_in(a, v)
    db = _dense_in(b, v)
    cont = _gcd(_content(da), _content(db))
    pa = _primitive(da)
    pb = _primitive(db)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while True:
        r = _trim(_prem(pa, pb))
        if not r:
            break
        pa, pb = pb, _primitive(r)
    result = MPoly.from_coeffs_in(v, {k: c for k, c in enumerate(pb)})
    return cont * result


def mpoly_gcd(a: MPoly, b: MPoly) -> MPoly:
    """Gcd normalized to leading coefficient 1 in the term order."""
    g = _gcd(a, b)
    return g.monic_normalized()


def divide_exact(a: MPoly, b: MPoly) -> MPoly:
    """Quotient a/b when b divides a exactly; raises ValueError otherwise."""
    if b.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero:
        return MPoly.zero()
    if b.is_constant:
        return a.scale(1 / b.as_constant())
    v = b.max_symbol()
    da = _trim(_dense_in(a, v))
    db = _trim(_dense_in(b, v))
    if len(da) < len(db):
        raise ValueError("division is not exact")
    quo: dict[int, MPoly] = {}
    while da:
        if len(da) < len(db):
            raise ValueError("division is not exact")
        shift = len(da) - len(db)
        qc = divide_exact(da[-1], db[-1])
        quo[shift] = qc
        for j in range(len(db)):
            da[shift + j] = da[shift + j] - qc * db[j]
        if not da[-1].is_zero:
            raise ValueError("division is not exact")
        da.pop()
        _trim(da)
    return MPoly.from_coeffs_in(v, quo)
