"""The symbol alphabet for jet-space expressions.

Three kinds of symbols:

- frame coordinates: the derivative coordinates of a curve germ on the
  line, written lam, lam_e, lam_ee, ... (index = derivative count);
- letters: formal derivatives f, f', f'', ... of a named function of the
  base coordinate; differentiating with respect to the base coordinate
  bumps the index, so the chain rule is mechanical rather than manual;
- constants: named scalars every derivation kills (for instance the value
  of a function frozen at the base point).

The ordering below (frames, then letters by name, then constants) fixes
the canonical monomial sort used by the polynomial layer, which is what
makes symbolic equality checks structural.
"""

from __future__ import annotations

from dataclasses import dataclass

FRAME = "frame"
LETTER = "letter"
CONST = "const"

_KIND_RANK = {FRAME: 0, LETTER: 1, CONST: 2}


@dataclass(frozen=True)
class JetSymbol:
    kind: str
    name: str
    index: int


def frame(index: int) -> JetSymbol:
    """The index-th derivative coordinate of the moving point."""
    if index < 0:
        raise ValueError("frame index must be nonnegative")
    return JetSymbol(FRAME, "", index)


def letter(name: str, index: int = 0) -> JetSymbol:
    """The index-th formal derivative of the named function."""
    if index < 0:
        raise ValueError("letter index must be nonnegative")
    return JetSymbol(LETTER, name, index)


def const(name: str) -> JetSymbol:
    """A named scalar annihilated by every derivation."""
    return JetSymbol(CONST, name, 0)


def sort_key(s: JetSymbol) -> tuple[int, str, int]:
    return (_KIND_RANK[s.kind], s.name, s.index)


def display(s: JetSymbol) -> str:
    if s.kind == FRAME:
        if s.index == 0:
            return "lam"
        if s.index <= 3:
            return "lam_" + "e" * s.index
        return f"lam_e{s.index}"
    if s.kind == LETTER:
        return s.name + "'" * s.index
    return s.name
