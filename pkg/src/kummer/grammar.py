"""Text syntax for rational functions: tokenizer, parser, renderer.

The accepted grammar (whitespace is insignificant):

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' integer)?
    base   := integer | identifier | '(' expr ')' | '-' factor

Numbers are integer literals; a rational constant like 3/4 is ordinary
division of two of them. Exponents are nonnegative integer literals, so
negative powers are spelled with division, e.g. 1/x^2. At most one
identifier may appear: the first one seen is bound as the variable and
any different name is rejected.

:func:`render_ratfunc` emits a canonical spelling (reduced fraction with
monic denominator, terms in descending powers, no whitespace) chosen so
that parsing it back reproduces the same :class:`~kummer.ratfunc.RatFunc`
exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import RatParseError
from .poly import Poly
from .rat import Rat
from .ratfunc import RatFunc

__all__ = [
    "parse_expression",
    "parse_ratfunc",
    "render_poly",
    "render_ratfunc",
    "tokenize",
]

_OPERATOR_CHARS = "+-*/^()"

# Guards against accidental blowup from pathological input, not a
# mathematical limit; anything a classification could use is far below it.
_MAX_EXPONENT = 10_000


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "ident", "end", or the operator character itself
    text: str
    position: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("ident", text[i:j], i))
            i = j
            continue
        if ch in _OPERATOR_CHARS:
            tokens.append(Token(ch, ch, i))
            i += 1
            continue
        raise RatParseError(f"unexpected character {ch!r}", i)
    tokens.append(Token("end", "", n))
    return tokens


class _Parser:
    """Recursive descent over the token stream, evaluating as it goes.

    Values are built directly as RatFunc, so precedence and reduction
    come for free from the exact arithmetic; there is no separate tree.
    """

    def __init__(self, text: str, variable: str | None) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        self.required = variable
        self.bound: str | None = None

    def peek(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token.kind != kind:
            raise RatParseError(
                f"expected {kind!r}, found {token.text or 'end of input'!r}",
                token.position,
            )
        return self.advance()

    def parse(self) -> RatFunc:
        value = self.expr()
        tail = self.peek()
        if tail.kind != "end":
            raise RatParseError(
                f"unexpected {tail.text!r} after complete expression",
                tail.position,
            )
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance()
            right = self.term()
            value = value + right if op.kind == "+" else value - right
        return value

    def term(self) -> RatFunc:
        value = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance()
            right = self.factor()
            if op.kind == "*":
                value = value * right
            elif right.is_zero:
                raise RatParseError("division by zero", op.position)
            else:
                value = value / right
        return value

    def factor(self) -> RatFunc:
        value = self.base()
        if self.peek().kind == "^":
            self.advance()
            exponent = self.expect("int")
            power = int(exponent.text)
            if power > _MAX_EXPONENT:
                raise RatParseError(
                    f"exponent {power} is too large", exponent.position
                )
            value = value**power
        return value

    def base(self) -> RatFunc:
        token = self.peek()
        if token.kind == "int":
            self.advance()
            return RatFunc.const(int(token.text))
        if token.kind == "ident":
            self.advance()
            self.bind(token)
            return RatFunc.variable()
        if token.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        if token.kind == "-":
            self.advance()
            return -self.factor()
        raise RatParseError(
            f"expected a value, found {token.text or 'end of input'!r}",
            token.position,
        )

    def bind(self, token: Token) -> None:
        if self.bound is None:
            if self.required is not None and token.text != self.required:
                raise RatParseError(
                    f"expected variable {self.required!r}, found {token.text!r}",
                    token.position,
                )
            self.bound = token.text
        elif token.text != self.bound:
            raise RatParseError(
                f"more than one variable: {self.bound!r} and {token.text!r}",
                token.position,
            )


def parse_expression(
    text: str, variable: str | None = None
) -> tuple[RatFunc, str]:
    """Parse ``text`` and report the variable name that was bound.

    When ``variable`` is given, the expression must use that name or be
    constant. Constant expressions bind nothing; the returned name then
    falls back to ``variable`` or ``"x"``.
    """
    parser = _Parser(text, variable)
    value = parser.parse()
    return value, parser.bound or variable or "x"


def parse_ratfunc(text: str, variable: str | None = None) -> RatFunc:
    """Parse ``text`` into a canonical rational function."""
    value, _ = parse_expression(text, variable)
    return value


def _render_rational(c: Rat) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _render_term(magnitude: Rat, exponent: int, variable: str) -> str:
    if exponent == 0:
        return _render_rational(magnitude)
    head = variable if exponent == 1 else f"{variable}^{exponent}"
    if magnitude == 1:
        return head
    return f"{_render_rational(magnitude)}*{head}"


def render_poly(p: Poly, variable: str = "x") -> str:
    """Render a polynomial in descending powers with no whitespace."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for exponent in range(p.degree, -1, -1):
        c = p.coeff(exponent)
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        if not parts:
            sign = "-" if c < 0 else ""
        parts.append(sign + _render_term(abs(c), exponent, variable))
    return "".join(parts)


def _term_count(p: Poly) -> int:
    return sum(1 for c in p.coeffs if c != 0)


def render_ratfunc(f: RatFunc, variable: str = "x") -> str:
    """Render ``f`` canonically so that reparsing reproduces it exactly.

    The denominator of a canonical RatFunc is monic, so when it is a
    single term it is a bare power of the variable and needs no
    parentheses; a single-term numerator is likewise safe on the left of
    ``/`` because ``*`` and ``/`` associate to the left.
    """
    if f.den == Poly.one():
        return render_poly(f.num, variable)
    num = render_poly(f.num, variable)
    if _term_count(f.num) > 1:
        num = f"({num})"
    den = render_poly(f.den, variable)
    if _term_count(f.den) > 1:
        den = f"({den})"
    return f"{num}/{den}"
