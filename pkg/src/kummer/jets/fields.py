"""Vector fields on the frame space and prolongation of a generator.

A :class:`FrameVectorField` of order k is a derivation with one
coefficient per frame coordinate 0..k. Applying it uses the chain-aware
base partial from :mod:`expr`, which is what makes brackets against
fields whose coefficients mention letters (curvature values at the moving
point) come out right without hand bookkeeping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expr import JetExpr, jet_partial, total_derivative


@dataclass(frozen=True)
class FrameVectorField:
    coeffs: tuple[JetExpr, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a vector field needs at least one coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def apply(self, e: JetExpr) -> JetExpr:
        total = JetExpr.zero()
        for j, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            total = total + c * jet_partial(e, j)
        return total

    def bracket(self, other: "FrameVectorField") -> "FrameVectorField":
        if self.order != other.order:
            raise ValueError("bracket of fields of different orders")
        coeffs = tuple(
            self.apply(oc) - other.apply(sc)
            for sc, oc in zip(self.coeffs, other.coeffs)
        )
        return FrameVectorField(coeffs)

    def __add__(self, other: "FrameVectorField") -> "FrameVectorField":
        if not isinstance(other, FrameVectorField):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("sum of fields of different orders")
        return FrameVectorField(
            tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "FrameVectorField") -> "FrameVectorField":
        if not isinstance(other, FrameVectorField):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, factor) -> "FrameVectorField":
        f = factor if isinstance(factor, JetExpr) else JetExpr.make(factor)
        return FrameVectorField(tuple(f * c for c in self.coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c.is_zero for c in self.coeffs)


def prolong(letter_name: str, order: int) -> FrameVectorField:
    """Prolongation of the formal generator ``a(lam) d/dlam`` to order-k
    frames: coefficient j is the j-th total derivative of the letter.

    Truncation is consistent by construction: the order-2 prolongation is
    the first three coefficients of the order-3 one.
    """
    if not 0 <= order <= 3:
        raise ValueError("frame order must be between 0 and 3")
    coeffs = [JetExpr.of_letter(letter_name, 0)]
    for _ in range(order):
        coeffs.append(total_derivative(coeffs[-1]))
    return FrameVectorField(tuple(coeffs))
