"""Exception types raised across the package."""

from __future__ import annotations


class UnsupportedOrderError(ValueError):
    """Field order is not a supported prime or prime power."""


class PreconditionError(ValueError):
    """A hypothesis of a relation check does not hold.

    Distinct from a relation check returning False: a violated hypothesis
    says nothing about the conclusion.
    """


class CapExceededError(RuntimeError):
    """An enumeration or scan would exceed its configured size cap."""


class NotAOneCodeError(ValueError):
    """Input code has two words at Hamming distance at most 2."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAPartitionError(ValueError):
    """Input codes do not partition the space."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(ValueError):
    """Malformed text input; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
