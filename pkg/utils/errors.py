"""
utils/errors.py

This module defines the exception hierarchy shared by every layer of the package.
Each exception carries enough context (operand dims, pivot index, byte offset)
for the command line to print an actionable diagnostic.

Classes:
    - AwlsError: Base class of every error raised by this package.
    - ShapeError: Raised when operand dimensions do not conform.
    - DomainError: Raised when a value lies outside its mathematical domain.
    - ParameterError: Raised when a configuration parameter is invalid.
    - NotPositiveDefiniteError: Raised when a Cholesky factorization meets a non-positive pivot.
    - FormatError: Raised when file bytes cannot be decoded.
"""

from typing import Optional, Tuple


class AwlsError(Exception):
    """
    Base class of every error raised by this package.
    """

    pass


class ShapeError(AwlsError, ValueError):
    """
    Raised when operand dimensions do not conform.

    Usage:
        raise ShapeError("matmul", (2, 3), (2, 3))
    """

    def __init__(
        self,
        operation: str,
        left: Tuple[int, ...],
        right: Optional[Tuple[int, ...]] = None,
        detail: str = "",
    ):
        self.operation = operation
        self.left = tuple(left)
        self.right = tuple(right) if right is not None else None
        dims = f"{_fmt_dims(self.left)}"
        if self.right is not None:
            dims += f" and {_fmt_dims(self.right)}"
        message = f"{operation}: incompatible dims {dims}"
        if detail:
            message += f" ({detail})"
        super().__init__(message)


class DomainError(AwlsError, ValueError):
    """
    Raised when a value lies outside its mathematical domain (non-finite data,
    weights outside [0, 1], zero-norm signals, ...).
    """

    pass


class ParameterError(AwlsError, ValueError):
    """
    Raised when a configuration parameter violates its precondition.
    """

    pass


class NotPositiveDefiniteError(AwlsError, ArithmeticError):
    """
    Raised when a symmetric factorization meets a non-positive pivot.

    Attributes:
        pivot (int): 0-based index of the offending pivot.
    """

    def __init__(self, pivot: int, message: Optional[str] = None):
        self.pivot = pivot
        super().__init__(
            message or f"matrix is not positive definite (pivot {pivot})"
        )


class FormatError(AwlsError, ValueError):
    """
    Raised when file bytes cannot be decoded.

    Attributes:
        offset (Optional[int]): Byte offset at which decoding failed, when known.
    """

    def __init__(self, message: str, offset: Optional[int] = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (at byte {offset})"
        super().__init__(message)


def _fmt_dims(dims: Tuple[int, ...]) -> str:
    return "x".join(str(d) for d in dims)
