"""Exception hierarchy shared by every module."""

from __future__ import annotations


class KohnertError(Exception):
    """Base class for errors raised by this package."""


class ParseError(KohnertError, ValueError):
    """Malformed diagram or composition text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(KohnertError, ValueError):
    """An operation was called outside its domain (e.g. a non-northwest diagram)."""


class NotKeyPositiveError(KohnertError):
    """Greedy key expansion hit a negative coefficient."""

    def __init__(self, message: str, remainder=None):
        self.remainder = remainder
        super().__init__(message)


class StructuralError(KohnertError):
    """A computed object contradicts a structural theorem the library relies on.

    Raised loudly on purpose: seeing one means either a bug or a
    counterexample, and the two must not be confused with bad input.
    """


class ScaleGuardError(KohnertError):
    """The brute-force module oracle refused an input that is too large."""
