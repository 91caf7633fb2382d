"""Numeric 3-jets of maps of the line: composition, inversion, Schwarzian.

``fdb3`` is the third-order chain rule written once over an arbitrary
commutative ring, so the same three formulas drive numeric jet
composition here, the action on frames in the groupoid layer, and the
fully symbolic cocycle check in the identity suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..rat import Rat


def fdb3(outer: tuple, inner: tuple) -> tuple:
    """Derivatives, through order three, of a composition.

    ``outer`` and ``inner`` are triples (d1, d2, d3) of derivatives taken
    at matching points; the result is the derivative triple of
    outer-after-inner. Entries may live in any commutative ring that
    supports + and *, numeric or symbolic."""
    d1, d2, d3 = outer
    e1, e2, e3 = inner
    c1 = d1 * e1
    c2 = d2 * e1 * e1 + d1 * e2
    c3 = d3 * e1 * e1 * e1 + 3 * d2 * e1 * e2 + d1 * e3
    return (c1, c2, c3)


@dataclass(frozen=True)
class Jet3:
    """A 3-jet of a map germ: source, target, and three derivatives.

    The first derivative must be invertible, i.e. nonzero."""

    source: Rat
    target: Rat
    d1: Rat
    d2: Rat
    d3: Rat

    def __post_init__(self):
        if self.d1 == 0:
            raise ValueError("jet is not invertible: first derivative is zero")

    def derivatives(self) -> tuple[Rat, Rat, Rat]:
        return (self.d1, self.d2, self.d3)


def identity_jet(point: Rat) -> Jet3:
    return Jet3(point, point, Fraction(1), Fraction(0), Fraction(0))


def compose_jets(outer: Jet3, inner: Jet3) -> Jet3:
    """The jet of outer-after-inner; sources must match up."""
    if outer.source != inner.target:
        raise ValueError(
            f"jets do not compose: outer source {outer.source} != inner target {inner.target}"
        )
    c1, c2, c3 = fdb3(outer.derivatives(), inner.derivatives())
    return Jet3(inner.source, outer.target, c1, c2, c3)


def invert_jet(j: Jet3) -> Jet3:
    """The 3-jet of the inverse germ."""
    e1 = 1 / j.d1
    e2 = -j.d2 * e1**3
    e3 = (3 * j.d2**2 - j.d1 * j.d3) * e1**5
    return Jet3(j.target, j.source, e1, e2, e3)


def jet_schwarzian(j: Jet3) -> Rat:
    """Schwarzian derivative of the jet: d3/d1 - (3/2)(d2/d1)^2."""
    return j.d3 / j.d1 - Fraction(3, 2) * (j.d2 / j.d1) ** 2
