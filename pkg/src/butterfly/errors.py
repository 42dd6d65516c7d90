"""Shared exception types."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed textual input.

    ``offset`` is the 0-based position of the first offending character
    (or the text length for truncated input).
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)
        self.offset = offset


class DomainError(ValueError):
    """Arguments outside an operation's stated domain."""


class CapacityError(DomainError):
    """Exhaustive enumeration request beyond the configured resource guard."""


class ExactnessError(ArithmeticError):
    """An exact division or rational clearing failed.

    Every quantity in this library is an integer or an exact rational, so a
    non-integral result where an integer is expected is a bug, never
    something to round.
    """
