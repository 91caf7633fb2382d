"""Exception types shared across the library.

The CLI maps these onto exit codes, so everything user-facing that can go
wrong is funneled through one of the three concrete classes below.
"""

from __future__ import annotations


class KummerError(Exception):
    """Base class for all errors raised by this package."""


class RatParseError(KummerError):
    """Malformed expression text.

    ``position`` is a 0-based character offset into the input when the
    tokenizer or parser can point at one, else None.
    """

    def __init__(self, message: str, position: int | None = None) -> None:
        super().__init__(message)
        self.message = message
        self.position = position

    def __str__(self) -> str:
        if self.position is None:
            return self.message
        return f"{self.message} (at position {self.position})"


class UnsupportedPolesError(KummerError):
    """A denominator has a factor with no rational root.

    The classifier only certifies structures whose curvature has all poles
    at rational points; ``residual_factor`` is the offending polynomial
    factor (monic, rational-root-free) so callers can report it.
    """

    def __init__(self, message: str, residual_factor=None) -> None:
        super().__init__(message)
        self.message = message
        self.residual_factor = residual_factor


class VerificationError(KummerError):
    """An internal exactness check failed.

    Raised when a computed witness does not verify by substitution. This
    is a bug trap, never a normal outcome; the CLI reports it as an
    internal failure.
    """
