"""Exception hierarchy shared by all fmzs sub-packages."""

from typing import Optional


class FmzsError(Exception):
    """Base class for every error raised on purpose by fmzs."""


class NotZFormError(FmzsError, ValueError):
    """A word ending in ``x`` was given where a z-form word is required."""


class IndexDomainError(FmzsError, ValueError):
    """A mult-index is not admissible, has the wrong weight, or cannot be parsed."""


class ParseError(FmzsError, ValueError):
    """A linear-system file is malformed.

    Attributes:
        line: 1-based line number of the offending line, or None for binary files
    """

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SizeGuardError(FmzsError, RuntimeError):
    """A configured size guard (dense oracle, large weights) was exceeded."""


class InvariantError(FmzsError, AssertionError):
    """An internal invariant failed. This signals a bug, not bad input."""


__all__ = [
    "FmzsError",
    "NotZFormError",
    "IndexDomainError",
    "ParseError",
    "SizeGuardError",
    "InvariantError",
]
