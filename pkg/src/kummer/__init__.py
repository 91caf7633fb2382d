"""Exact classification of projective structures on the complex line.

The library takes a rational curvature function, builds the groupoid of
jets that preserve the associated projective structure, and decides its
integrability and minimality properties through an exact differential
Galois computation. Everything is certified: each reported witness is
re-verified by substitution over Q before it leaves the pipeline.

The high-level entry points live here: :func:`parse_ratfunc` and
:func:`render_ratfunc` for the expression syntax, :func:`classify` and
:func:`render_report` for full reports, and :func:`verify_identities`
for the symbolic self-check suite. The geometric and Galois layers are
importable from :mod:`kummer.groupoid`, :mod:`kummer.jets`, and
:mod:`kummer.galois`.
"""

from .errors import KummerError, RatParseError, UnsupportedPolesError, VerificationError
from .grammar import parse_expression, parse_ratfunc, render_poly, render_ratfunc
from .identities import CheckResult, verify_identities
from .poly import Poly
from .rat import Rat, rat
from .ratfunc import RatFunc
from .report import (
    AffineReduction,
    ClassificationReport,
    classify,
    render_report,
    report_from_json,
)

__version__ = "0.1.0"

__all__ = [
    "AffineReduction",
    "CheckResult",
    "ClassificationReport",
    "KummerError",
    "Poly",
    "Rat",
    "RatFunc",
    "RatParseError",
    "UnsupportedPolesError",
    "VerificationError",
    "classify",
    "parse_expression",
    "parse_ratfunc",
    "rat",
    "render_poly",
    "render_ratfunc",
    "render_report",
    "report_from_json",
    "verify_identities",
    "__version__",
]
