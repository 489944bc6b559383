"""Exception types shared across the package."""

from __future__ import annotations


class Z2ZUError(Exception):
    """Base class for package errors."""


class ShapeMismatchError(Z2ZUError):
    """Operands live in different ambient spaces; refusing to truncate."""


class EnumerationCapError(Z2ZUError):
    """An enumeration would exceed the configured cap.

    For distance computations `upper_bound` carries the best weight seen
    during sampled enumeration (None if nothing was sampled).
    """

    def __init__(self, message: str, upper_bound: int | None = None):
        super().__init__(message)
        self.upper_bound = upper_bound


class TheoremInapplicableError(Z2ZUError):
    """A criterion's hypotheses do not hold for the given input."""


class ConstructionError(Z2ZUError):
    """Construction input invariants are violated; lists each violation."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class ParseError(Z2ZUError):
    """Malformed text input, with 1-based line/column position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"line {line}, col {col}: {message}")
        self.line = line
        self.col = col


class InternalCheckError(Z2ZUError):
    """Two independent computations of the same quantity disagreed."""
