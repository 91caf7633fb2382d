"""Geometry of a projective structure on the line and its jet groupoid.

A projective structure is presented by its rational curvature function.
The jets preserving the structure are cut out by one residual equation
(third-order chain rule applied to the curvature), and on third-order
frames the same data appears as a differential invariant whose level set
is the groupoid's source fiber. This module holds those objects plus the
two distinguished frame-field bases: the parallel basis obtained by
left-translating a fixed basis at the reference frame, and the
normalized basis whose brackets are the standard three-dimensional
simple ones.

Symbol conventions: the curvature letter is ``R`` (so ``R``, ``R'``, ...
are its formal derivatives along the moving point) and the inert constant
``R0`` is its value frozen at the base point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import VerificationError
from .jets.compose import Jet3, fdb3, jet_schwarzian
from .jets.expr import JetExpr
from .jets.fields import FrameVectorField
from .jets.symbols import const
from .poles import linear_factors
from .rat import Rat
from .ratfunc import RatFunc

CURVATURE_LETTER = "R"
BASEPOINT_CONST = "R0"

_LAM_E = JetExpr.of_frame(1)
_LAM_EE = JetExpr.of_frame(2)
_LAM_EEE = JetExpr.of_frame(3)


# -- structures ------------------------------------------------------------


@dataclass(frozen=True)
class ProjectiveStructure:
    """A projective structure presented by its curvature function.

    Construction validates that every pole of the curvature is at a
    rational point, which is the certification boundary of the package.
    """

    curvature: RatFunc

    def __post_init__(self):
        linear_factors(self.curvature.den)


@dataclass(frozen=True)
class AffineStructure:
    """An affine structure presented by its connection coefficient."""

    connection_coefficient: RatFunc

    def __post_init__(self):
        linear_factors(self.connection_coefficient.den)


@dataclass(frozen=True)
class LinearODE:
    """A monic linear differential operator with rational coefficients.

    ``coefficients[i]`` multiplies the i-th derivative; the top one must
    be the constant 1 so kernels have the expected dimension.
    """

    coefficients: tuple[RatFunc, ...]

    def __post_init__(self):
        if not self.coefficients:
            raise ValueError("operator needs at least one coefficient")
        top = self.coefficients[-1]
        if not (top.is_constant and not top.is_zero and top.as_constant() == 1):
            raise ValueError("operator must be monic")

    @staticmethod
    def make(coefficients) -> "LinearODE":
        return LinearODE(tuple(RatFunc.make(c) for c in coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def apply(self, f) -> RatFunc:
        f = RatFunc.make(f)
        total = RatFunc.zero()
        g = f
        for c in self.coefficients:
            total = total + c * g
            g = g.derivative()
        return total


@dataclass(frozen=True)
class Frame:
    """A third-order frame: base point plus three derivative coordinates.

    The first derivative coordinate must be nonzero (frames are jets of
    immersed germs)."""

    lam: Rat
    lam_e: Rat
    lam_ee: Rat
    lam_eee: Rat

    def __post_init__(self):
        if self.lam_e == 0:
            raise ValueError("not a frame: first derivative coordinate is zero")


def reference_frame(point: Rat) -> Frame:
    return Frame(Fraction(point), Fraction(1), Fraction(0), Fraction(0))


def default_basepoint(structure: ProjectiveStructure) -> Rat:
    """Smallest nonnegative integer that is not a curvature pole."""
    k = 0
    while structure.curvature.has_pole_at(k):
        k += 1
    return Fraction(k)


# -- rational-function geometry helpers ------------------------------------


def schwarzian(f: RatFunc) -> RatFunc:
    """Schwarzian derivative of a non-constant rational map."""
    d1 = f.derivative()
    if d1.is_zero:
        raise ValueError("Schwarzian of a constant map")
    d2 = d1.derivative()
    d3 = d2.derivative()
    return d3 / d1 - Fraction(3, 2) * (d2 / d1) ** 2


def transform_projective(structure: ProjectiveStructure, phi: RatFunc) -> ProjectiveStructure:
    """Pullback of the structure under a non-constant rational map."""
    pulled = schwarzian(phi) + phi.derivative() ** 2 * structure.curvature.compose(phi)
    return ProjectiveStructure(pulled)


def transform_affine(structure: AffineStructure, phi: RatFunc) -> AffineStructure:
    """Pullback of an affine structure: log-derivative correction plus
    the chain-rule term."""
    d1 = phi.derivative()
    if d1.is_zero:
        raise ValueError("pullback under a constant map")
    pulled = d1.derivative() / d1 + d1 * structure.connection_coefficient.compose(phi)
    return AffineStructure(pulled)


# -- the invariant and residuals -------------------------------------------


def invariant_symbolic() -> JetExpr:
    """The frame invariant with the curvature left as a formal letter."""
    R = JetExpr.of_letter(CURVATURE_LETTER, 0)
    return (
        _LAM_EEE / _LAM_E
        - Fraction(3, 2) * (_LAM_EE / _LAM_E) ** 2
        + R * _LAM_E**2
    )


def invariant_I(structure: ProjectiveStructure) -> JetExpr:
    """The invariant with the concrete curvature substituted in."""
    return invariant_symbolic().specialize_letter(
        CURVATURE_LETTER, structure.curvature
    )


def invariant_value(structure: ProjectiveStructure, fr: Frame) -> Rat:
    r_at = structure.curvature.eval(fr.lam)
    return (
        fr.lam_eee / fr.lam_e
        - Fraction(3, 2) * (fr.lam_ee / fr.lam_e) ** 2
        + r_at * fr.lam_e**2
    )


def kummer_residual(structure: ProjectiveStructure, jet: Jet3) -> Rat:
    """Defect of a jet against the structure's defining equation.

    Zero exactly when the jet belongs to the structure groupoid. Raises
    ZeroDivisionError if the curvature has a pole at either endpoint.
    """
    R = structure.curvature
    return (
        jet_schwarzian(jet)
        + jet.d1**2 * R.eval(jet.target)
        - R.eval(jet.source)
    )


def adapted_frame_residual(structure_or_none=None) -> JetExpr:
    """The polynomial cut-out equation for adapted frames, symbolically.

    Equals lam_e times (invariant minus the base-point constant); with a
    concrete structure the curvature letter is specialized, the base
    constant stays symbolic."""
    R = JetExpr.of_letter(CURVATURE_LETTER, 0)
    R0 = JetExpr.of_symbol(const(BASEPOINT_CONST))
    expr = (
        _LAM_EEE
        - Fraction(3, 2) * _LAM_EE**2 / _LAM_E
        + R * _LAM_E**3
        - R0 * _LAM_E
    )
    if structure_or_none is not None:
        expr = expr.specialize_letter(CURVATURE_LETTER, structure_or_none.curvature)
    return expr


def act_on_frame(jet: Jet3, fr: Frame) -> Frame:
    """Left translation of a frame by a jet with matching source."""
    if jet.source != fr.lam:
        raise ValueError("jet source does not match the frame's base point")
    c1, c2, c3 = fdb3(jet.derivatives(), (fr.lam_e, fr.lam_ee, fr.lam_eee))
    return Frame(jet.target, c1, c2, c3)


def left_translation_jacobian(jet: Jet3) -> tuple[tuple[Rat, ...], ...]:
    """Differential of left translation on second-order frame coordinates,
    taken at the reference frame of the jet's source."""
    d1, d2, d3 = jet.derivatives()
    zero = Fraction(0)
    return (
        (d1, zero, zero),
        (d2, d1, zero),
        (d3, 2 * d2, d1),
    )


# -- distinguished frame-field bases ---------------------------------------


def parallel_basis_symbolic() -> tuple[FrameVectorField, ...]:
    """The left-translation-parallel basis on second-order frames.

    Coefficients keep the curvature as the letter ``R`` and its frozen
    base-point value as the constant ``R0``."""
    R = JetExpr.of_letter(CURVATURE_LETTER, 0)
    R0 = JetExpr.of_symbol(const(BASEPOINT_CONST))
    zero = JetExpr.zero()
    y0 = FrameVectorField(
        (
            _LAM_E,
            _LAM_EE,
            R0 * _LAM_E
            + Fraction(3, 2) * _LAM_EE**2 / _LAM_E
            - R * _LAM_E**3,
        )
    )
    y1 = FrameVectorField((zero, _LAM_E, 2 * _LAM_EE))
    y2 = FrameVectorField((zero, zero, _LAM_E))
    return (y0, y1, y2)


def sl2_basis_symbolic() -> tuple[FrameVectorField, ...]:
    """The basis normalized to the standard simple bracket table."""
    R = JetExpr.of_letter(CURVATURE_LETTER, 0)
    zero = JetExpr.zero()
    e_minus = FrameVectorField(
        (
            _LAM_E,
            _LAM_EE,
            Fraction(3, 2) * _LAM_EE**2 / _LAM_E - R * _LAM_E**3,
        )
    )
    e_zero = FrameVectorField((zero, _LAM_E, 2 * _LAM_EE))
    e_plus = FrameVectorField((zero, zero, 2 * _LAM_E))
    return (e_minus, e_zero, e_plus)


def change_of_basis_symbolic() -> tuple[tuple[JetExpr, ...], ...]:
    """Matrix M with (parallel basis) = M (normalized basis), entries as
    jet expressions in the base-point constant."""
    R0 = JetExpr.of_symbol(const(BASEPOINT_CONST))
    one = JetExpr.one()
    zero = JetExpr.zero()
    half = JetExpr.const(Fraction(1, 2))
    return (
        (one, zero, R0 * half),
        (zero, one, zero),
        (zero, zero, half),
    )


def _specialize_field(
    field: FrameVectorField, structure: ProjectiveStructure, base_value: Rat
) -> FrameVectorField:
    mapping = {const(BASEPOINT_CONST): JetExpr.const(base_value)}
    coeffs = tuple(
        c.specialize_letter(CURVATURE_LETTER, structure.curvature).substitute(mapping)
        for c in field.coeffs
    )
    return FrameVectorField(coeffs)


def parallel_basis_Y(
    structure: ProjectiveStructure, basepoint: Rat | None = None
) -> tuple[FrameVectorField, ...]:
    """The parallel basis with the concrete curvature substituted."""
    base = default_basepoint(structure) if basepoint is None else Fraction(basepoint)
    value = structure.curvature.eval(base)
    return tuple(
        _specialize_field(f, structure, value) for f in parallel_basis_symbolic()
    )


def sl2_basis_E(structure: ProjectiveStructure) -> tuple[FrameVectorField, ...]:
    """The normalized basis with the concrete curvature substituted."""
    base_value = Fraction(0)  # unused: no R0 occurs in this basis
    return tuple(
        _specialize_field(f, structure, base_value) for f in sl2_basis_symbolic()
    )


def change_of_basis(
    structure: ProjectiveStructure, basepoint: Rat | None = None
) -> tuple[tuple[Rat, ...], ...]:
    base = default_basepoint(structure) if basepoint is None else Fraction(basepoint)
    value = structure.curvature.eval(base)
    one, zero, half = Fraction(1), Fraction(0), Fraction(1, 2)
    return (
        (one, zero, value / 2),
        (zero, one, zero),
        (zero, zero, half),
    )


# -- operators attached to the structures ----------------------------------


def lie_operator(structure: ProjectiveStructure) -> LinearODE:
    """Third-order operator whose kernel is the symmetry algebra of the
    structure: a''' + 2 R a' + R' a."""
    R = structure.curvature
    return LinearODE.make((R.derivative(), 2 * R, 0, 1))


def psi_operator(structure: ProjectiveStructure) -> LinearODE:
    """Second-order operator psi'' + (R/2) psi underlying the structure."""
    return LinearODE.make((structure.curvature / 2, 0, 1))


def affine_operator(structure: AffineStructure) -> LinearODE:
    """Second-order operator a'' + r a' + r' a cutting out the symmetry
    algebra of an affine structure."""
    r = structure.connection_coefficient
    return LinearODE.make((r.derivative(), r, 1))


def affine_to_projective(structure: AffineStructure) -> ProjectiveStructure:
    """The projective structure induced by an affine one: R = r' - r^2/2."""
    r = structure.connection_coefficient
    return ProjectiveStructure(r.derivative() - r * r / 2)


def affine_from_riccati(u: RatFunc) -> AffineStructure:
    """The affine reduction attached to a first-order witness: r = -2u."""
    return AffineStructure(-2 * u)


def riccati_residual(structure: ProjectiveStructure, u: RatFunc) -> RatFunc:
    """Defect of u against u' + u^2 + R/2 = 0."""
    return u.derivative() + u * u + structure.curvature / 2


def verify_affine_reduction(structure: ProjectiveStructure, u: RatFunc) -> AffineStructure:
    """Build the affine reduction from a witness, re-checking both the
    Riccati equation and the curvature round trip exactly."""
    if not riccati_residual(structure, u).is_zero:
        raise VerificationError(f"claimed witness fails the first-order equation: u = {u}")
    reduction = affine_from_riccati(u)
    if affine_to_projective(reduction).curvature != structure.curvature:
        raise VerificationError("affine reduction does not reproduce the curvature")
    return reduction


def variation_symbolic(letter_a: str = "a", letter_r: str = "r") -> JetExpr:
    """Linearization of the affine transformation law along a generator:
    a'' + r a' + r' a, all formal."""
    a0 = JetExpr.of_letter(letter_a, 0)
    a1 = JetExpr.of_letter(letter_a, 1)
    a2 = JetExpr.of_letter(letter_a, 2)
    r0 = JetExpr.of_letter(letter_r, 0)
    r1 = JetExpr.of_letter(letter_r, 1)
    return a2 + r0 * a1 + r1 * a0


def variation_delta_r(structure: AffineStructure, letter_a: str = "a") -> JetExpr:
    """The variation with the concrete connection coefficient filled in."""
    return variation_symbolic(letter_a=letter_a).specialize_letter(
        "r", structure.connection_coefficient
    )
