"""Exception types shared across the package."""

from __future__ import annotations


class QclcError(Exception):
    """Base class for all package errors."""


class MatrixFormatError(QclcError):
    """Malformed exponent-matrix or alist text; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None) -> None:
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class DimensionMismatchError(QclcError):
    """Structural shape disagreement between a base and an exponent matrix."""


class WalkStructureError(QclcError):
    """A cycle walk references an empty cell or an out-of-range edge index."""


class FourCyclePresentError(QclcError):
    """An operation that assumes 4-cycle freedom was given a graph with 4-cycles."""
