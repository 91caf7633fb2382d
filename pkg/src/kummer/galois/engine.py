"""Structure-facing entry points of the Galois layer.

The solver modules below this one speak the normal form y'' = r y. A
projective structure with curvature R hands its linearization over with
r = -R/2, so the Riccati equations u' + u^2 = r and u' + u^2 + R/2 = 0
are literally the same equation and certificates transfer verbatim.
These wrappers do that translation, and also dress the raw series and
operator helpers in the structure-level types used by the classifier.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..groupoid import LinearODE, ProjectiveStructure
from ..rat import Rat
from ..ratfunc import RatFunc
from .kovacic import GaloisClass, classify_normal_form, lie_irreducible
from .linear import rational_solutions as _rational_kernel
from .linear import series_solutions as _series_kernel
from .riccati import RiccatiAnalysis, riccati_solve

__all__ = [
    "FundamentalSeries",
    "kovacic_classify",
    "lie_irreducible",
    "rational_solutions",
    "riccati_rational",
    "series_solutions",
]


@dataclass(frozen=True)
class FundamentalSeries:
    """Truncated fundamental system at an ordinary point.

    ``solutions[i]`` is the coefficient list of the solution whose jet at
    the expansion point is the i-th unit vector, so the truncated
    Wronskian at the point is 1 by construction."""

    expansion_point: Rat
    order: int
    solutions: tuple[tuple[Rat, ...], ...]


def _normal_form(structure) -> RatFunc:
    if isinstance(structure, ProjectiveStructure):
        return RatFunc.make(-1, 2) * structure.curvature
    return RatFunc.make(-1, 2) * RatFunc.make(structure)


def _coefficients(ode) -> tuple[RatFunc, ...]:
    if isinstance(ode, LinearODE):
        return ode.coefficients
    return tuple(ode)


def riccati_rational(structure) -> RiccatiAnalysis:
    """All rational solutions of u' + u^2 + R/2 = 0, with count class.

    Accepts a :class:`ProjectiveStructure` or a bare curvature R."""
    return riccati_solve(_normal_form(structure))


def kovacic_classify(structure) -> GaloisClass:
    """Galois classification of the linearization of a structure."""
    return classify_normal_form(_normal_form(structure))


def rational_solutions(ode) -> list[RatFunc]:
    """Basis of the rational kernel of an operator."""
    return _rational_kernel(_coefficients(ode))


def series_solutions(ode, point, n_terms: int) -> FundamentalSeries:
    """Fundamental system of truncated series solutions at ``point``."""
    coeffs = _coefficients(ode)
    basis = _series_kernel(coeffs, point, n_terms)
    return FundamentalSeries(
        expansion_point=point,
        order=len(coeffs) - 1,
        solutions=tuple(tuple(sol) for sol in basis),
    )
