"""Differential Galois analysis of the operators attached to a structure.

Layers, bottom up: :mod:`linear` finds polynomial, rational, and power
series solutions of linear operators with rational coefficients;
:mod:`riccati` runs the rational-certificate search for the first-order
quadratic equation attached to a second-order operator; :mod:`kovacic`
walks the remaining algebraic-subgroup cases and produces the final
classification tag with exactly verified witnesses; :mod:`engine` wraps
the lot behind the structure-level types.

The package-level ``rational_solutions`` and ``series_solutions`` accept
either a :class:`~kummer.groupoid.LinearODE` or a bare coefficient
tuple; the tuple-only workhorses stay importable from :mod:`linear`.
"""

from .engine import (
    FundamentalSeries,
    kovacic_classify,
    lie_irreducible,
    rational_solutions,
    riccati_rational,
    series_solutions,
)
from .kovacic import (
    GaloisClass,
    TAGS,
    classify_normal_form,
    dihedral_certificate,
    exp_integral_is_algebraic,
    primitive_certificate,
    symmetric_square_operator,
    symmetric_square_rational_basis,
)
from .linear import (
    apply_operator_series,
    compose_operators,
    operator_apply,
    polynomial_solutions,
)
from .riccati import (
    RiccatiAnalysis,
    riccati_defect,
    riccati_solve,
    solution_count_refinement,
)

__all__ = [
    "FundamentalSeries",
    "GaloisClass",
    "RiccatiAnalysis",
    "TAGS",
    "apply_operator_series",
    "classify_normal_form",
    "compose_operators",
    "dihedral_certificate",
    "exp_integral_is_algebraic",
    "kovacic_classify",
    "lie_irreducible",
    "operator_apply",
    "polynomial_solutions",
    "primitive_certificate",
    "rational_solutions",
    "riccati_defect",
    "riccati_rational",
    "riccati_solve",
    "series_solutions",
    "solution_count_refinement",
    "symmetric_square_operator",
    "symmetric_square_rational_basis",
]
