"""
algorithms/_weights.py

Adaptive weight mechanism. Each update rescales |W o S| by its largest entry,
raises it to the power p and multiplies the complement into the current
weights, so entries at large sparse values shrink toward 0 while entries where
S vanishes keep their weight.

Functions:
    - init_weights: All-ones initial state.
    - scaling_factor: Normalized magnitude T = |W o S| / max|W o S|.
    - intermediate_weights: W_hat = 1 - T^p.
    - update_weights: One full update W' = W_hat o W.
    - max_weight_change: Largest entrywise difference between two weight matrices.
"""

import numpy as np
from loguru import logger

from kernels import as_matrix, hadamard, max_abs
from models import DenseMatrix, Dims, WeightState
from utils.errors import DomainError, ParameterError, ShapeError


def init_weights(dims: Dims, p: float) -> WeightState:
    if not p > 0:
        raise ParameterError(f"weight exponent p must be positive, got {p}")
    return WeightState(w=np.ones(dims.shape), p=p, step=0)


def scaling_factor(w: DenseMatrix, s: DenseMatrix) -> DenseMatrix:
    """
    Normalized magnitude of the weighted sparse component.

    When W o S vanishes everywhere the zero matrix is returned, which leaves
    the weights unchanged.

    Raises:
        ShapeError: If `w` and `s` differ in shape.
    """
    if np.shape(w) != np.shape(s):
        raise ShapeError("scaling_factor", np.shape(w), np.shape(s))
    ws = np.abs(hadamard(w, s))
    peak = max_abs(ws)
    if peak == 0.0:
        return np.zeros_like(ws)
    return ws / peak


def intermediate_weights(t: DenseMatrix, p: float) -> DenseMatrix:
    """
    Map a scaling factor onto intermediate weights W_hat = 1 - T^p.

    Raises:
        ParameterError: If p is not positive.
        DomainError: If an entry of `t` lies outside [0, 1].
    """
    if not p > 0:
        raise ParameterError(f"weight exponent p must be positive, got {p}")
    t = as_matrix(t, "intermediate_weights")
    if np.any(t < 0.0) or np.any(t > 1.0):
        raise DomainError("intermediate_weights: scaling factor must lie in [0, 1]")
    return 1.0 - np.power(t, p)


def update_weights(state: WeightState, s: DenseMatrix) -> WeightState:
    """
    Apply one weight update driven by the sparse estimate `s`.

    Args:
        state (WeightState): Current weights.
        s (DenseMatrix): Current sparse component, same shape as the weights.

    Returns:
        WeightState: New state with entrywise non-increasing weights and the step incremented.
    """
    s = as_matrix(s, "update_weights")
    if s.shape != state.w.shape:
        raise ShapeError("update_weights", state.w.shape, s.shape)

    if not s.any():
        return WeightState(w=state.w, p=state.p, step=state.step + 1)

    w_hat = intermediate_weights(scaling_factor(state.w, s), state.p)
    w_new = hadamard(w_hat, state.w)

    if np.any(w_new < 0.0) or np.any(w_new > 1.0):
        raise DomainError("update_weights: weights left [0, 1]")
    if np.any(w_new > state.w):
        raise DomainError("update_weights: weights increased")

    logger.trace(f"weight step {state.step + 1}: min weight {float(w_new.min()):.3e}")
    return WeightState(w=w_new, p=state.p, step=state.step + 1)


def max_weight_change(before: DenseMatrix, after: DenseMatrix) -> float:
    return float(np.max(np.abs(np.asarray(before) - np.asarray(after))))
