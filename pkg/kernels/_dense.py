"""
kernels/_dense.py

Dense real-matrix kernels. Every kernel is a pure function of its inputs: it
validates dimensions and finiteness, never mutates its arguments, and returns a
fresh C-ordered float64 array.

Functions:
    - as_matrix: Validate and coerce an array-like into a DenseMatrix.
    - matmul: Matrix product.
    - hadamard: Entrywise product.
    - frob_norm_sq: Squared Frobenius norm.
    - max_abs: Largest absolute entry.
    - spd_solve: Solve a symmetric positive definite system by Cholesky factorization.
    - transpose: Matrix transpose.
"""

import math

import numpy as np
from scipy.linalg import cho_solve
from scipy.linalg.lapack import dpotrf

from models import DenseMatrix
from utils.errors import DomainError, NotPositiveDefiniteError, ShapeError

SYMMETRY_RTOL = 1e-10


def as_matrix(a, name: str = "matrix") -> DenseMatrix:
    """
    Coerce `a` into a 2-D, C-ordered float64 matrix with at least one row and
    column and only finite entries.

    Raises:
        ShapeError: If `a` is not a non-empty 2-D array.
        DomainError: If `a` holds NaN or Inf.
    """
    out = np.ascontiguousarray(a, dtype=np.float64)
    if out.ndim != 2 or out.shape[0] < 1 or out.shape[1] < 1:
        raise ShapeError(name, out.shape, detail="expected a non-empty 2-D matrix")
    if not np.isfinite(out).all():
        raise DomainError(f"{name}: entries must be finite")
    return out


def matmul(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    a, b = as_matrix(a, "matmul"), as_matrix(b, "matmul")
    if a.shape[1] != b.shape[0]:
        raise ShapeError("matmul", a.shape, b.shape)
    return np.ascontiguousarray(a @ b)


def hadamard(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    a, b = as_matrix(a, "hadamard"), as_matrix(b, "hadamard")
    if a.shape != b.shape:
        raise ShapeError("hadamard", a.shape, b.shape)
    return np.multiply(a, b)


def frob_norm_sq(a: DenseMatrix) -> float:
    """Sum of squared entries, correctly rounded so the result ignores storage order."""
    flat = as_matrix(a, "frob_norm_sq").ravel()
    return math.fsum((flat * flat).tolist())


def max_abs(a: DenseMatrix) -> float:
    return float(np.max(np.abs(as_matrix(a, "max_abs"))))


def transpose(a: DenseMatrix) -> DenseMatrix:
    return np.ascontiguousarray(as_matrix(a, "transpose").T)


def spd_solve(a: DenseMatrix, b: DenseMatrix) -> DenseMatrix:
    """
    Solve a X = b for symmetric positive definite `a`.

    Positive definiteness is certified by the Cholesky factorization itself;
    no explicit inverse is formed.

    Args:
        a (DenseMatrix): Square symmetric matrix (k x k).
        b (DenseMatrix): Right-hand sides (k x c).

    Returns:
        DenseMatrix: The solution X (k x c).

    Raises:
        ShapeError: If `a` is not square or its rows differ from `b`'s.
        DomainError: If `a` is not symmetric.
        NotPositiveDefiniteError: If the factorization meets a non-positive pivot.
    """
    a, b = as_matrix(a, "spd_solve"), as_matrix(b, "spd_solve")
    if a.shape[0] != a.shape[1]:
        raise ShapeError("spd_solve", a.shape, detail="left operand must be square")
    if a.shape[0] != b.shape[0]:
        raise ShapeError("spd_solve", a.shape, b.shape)
    scale = 1.0 + float(np.max(np.abs(a)))
    if np.max(np.abs(a - a.T)) > SYMMETRY_RTOL * scale:
        raise DomainError("spd_solve: left operand must be symmetric")

    factor, info = dpotrf(a, lower=False, clean=True)
    if info > 0:
        raise NotPositiveDefiniteError(pivot=int(info) - 1)
    if info < 0:
        raise DomainError(f"spd_solve: illegal argument {-info} to the factorization")

    x = cho_solve((factor, False), b, check_finite=False)
    if not np.isfinite(x).all():
        raise NotPositiveDefiniteError(
            pivot=a.shape[0] - 1, message="spd_solve: solution is not finite"
        )
    return np.ascontiguousarray(x)
