"""Symbolic calculus on third-order frames of the complex line.

Subpackage layout:

- ``symbols``: the alphabet (frame coordinates, formal derivative letters,
  inert constants) and its canonical ordering;
- ``mpoly``: sparse multivariate polynomials over Q in those symbols,
  with an exact gcd so fractions can be reduced;
- ``expr``: canonical fractions of such polynomials, plus the derivations
  (total jet derivative, chain-aware partials) everything else is built on;
- ``fields``: vector fields on the frame space, prolongation of a formal
  generator, Lie brackets;
- ``compose``: numeric 3-jets of maps, their composition and Schwarzian.
"""

from .compose import Jet3, compose_jets, fdb3, identity_jet, invert_jet, jet_schwarzian
from .expr import JetExpr, jet_partial, total_derivative
from .fields import FrameVectorField, prolong
from .mpoly import MPoly, mpoly_gcd
from .symbols import JetSymbol, const, frame, letter

__all__ = [
    "FrameVectorField",
    "Jet3",
    "JetExpr",
    "JetSymbol",
    "MPoly",
    "compose_jets",
    "const",
    "fdb3",
    "frame",
    "identity_jet",
    "invert_jet",
    "jet_partial",
    "jet_schwarzian",
    "letter",
    "mpoly_gcd",
    "prolong",
    "total_derivative",
]
