"""
algorithms/_solver.py

Alternating minimization of

    J(U, V, S; W) = ||Y - UV - S||_F^2 + lambda * ||W o S||_F^2

with closed-form sparse updates, proximal least-squares updates of the factors
and the adaptive weights of `algorithms._weights`. One iteration updates, in
order: W from the previous S, then S, then U, then V (using the new U).

Functions:
    - objective: J with the weighted L2 penalty.
    - objective_l0: Fidelity plus lambda * sum of W^2 over the support of S.
    - update_sparse_l2: Closed-form S for the weighted L2 penalty.
    - update_sparse_l0: Hard-threshold S for the weighted L0 penalty.
    - update_u: Proximal least-squares update of U.
    - update_v: Proximal least-squares update of V.
    - gaussian_init / power_init: Initial factor pairs.
    - solve: Run the full loop.
    - stationarity_residuals: Norms of the partial gradients at (U, V, S).

Classes:
    - WeightSnapshots: Iteration observer that keeps W at requested iterations.
"""

from typing import Callable, Dict, Iterable, Optional, Tuple

import numpy as np
from loguru import logger
from scipy.linalg import qr

from algorithms._weights import init_weights, max_weight_change, update_weights
from kernels import as_matrix, frob_norm_sq, hadamard, matmul, spd_solve, transpose
from models import (
    DecompositionResult,
    DenseMatrix,
    Dims,
    FactorPair,
    InitScheme,
    IterationState,
    SolverConfig,
    SparseVariant,
    Termination,
    TraceRecord,
)
from utils.errors import DomainError, ParameterError, ShapeError

IterationObserver = Callable[[IterationState], None]


def _check_factor_dims(
    operation: str, y: DenseMatrix, u: DenseMatrix, v: DenseMatrix
) -> None:
    if u.shape[1] != v.shape[0]:
        raise ShapeError(operation, u.shape, v.shape)
    if (u.shape[0], v.shape[1]) != y.shape:
        raise ShapeError(operation, y.shape, (u.shape[0], v.shape[1]))


def _check_same(operation: str, a: DenseMatrix, b: DenseMatrix) -> None:
    if a.shape != b.shape:
        raise ShapeError(operation, a.shape, b.shape)


def _fidelity(y, u, v, s) -> float:
    return frob_norm_sq(y - matmul(u, v) - s)


def objective(y, u, v, s, w, lam: float) -> float:
    """
    Evaluate ||Y - UV - S||_F^2 + lam * ||W o S||_F^2.

    Raises:
        ShapeError: If the operands do not conform.
    """
    y, u, v, s, w = (as_matrix(a, "objective") for a in (y, u, v, s, w))
    _check_factor_dims("objective", y, u, v)
    _check_same("objective", y, s)
    _check_same("objective", y, w)
    return _fidelity(y, u, v, s) + lam * frob_norm_sq(hadamard(w, s))


def objective_l0(y, u, v, s, w, lam: float) -> float:
    """
    Evaluate ||Y - UV - S||_F^2 + lam * sum(W^2 where S != 0), the objective
    minimized exactly by `update_sparse_l0`.
    """
    y, u, v, s, w = (as_matrix(a, "objective_l0") for a in (y, u, v, s, w))
    _check_factor_dims("objective_l0", y, u, v)
    _check_same("objective_l0", y, s)
    _check_same("objective_l0", y, w)
    penalty = float(np.sum(np.square(w), where=s != 0.0))
    return _fidelity(y, u, v, s) + lam * penalty


def update_sparse_l2(residual: DenseMatrix, w: DenseMatrix, lam: float) -> DenseMatrix:
    """
    Entrywise minimizer of (r - s)^2 + lam * w^2 * s^2, that is s = r / (1 + lam * w^2).
    """
    if lam < 0:
        raise ParameterError(f"lambda must be non-negative, got {lam}")
    residual, w = as_matrix(residual, "update_sparse_l2"), as_matrix(w, "update_sparse_l2")
    _check_same("update_sparse_l2", residual, w)
    return residual / (1.0 + lam * np.square(w))


def update_sparse_l0(residual: DenseMatrix, w: DenseMatrix, lam: float) -> DenseMatrix:
    """
    Entrywise minimizer of (r - s)^2 + lam * w^2 * [s != 0]: keep r where
    r^2 > lam * w^2, zero elsewhere (ties go to zero).
    """
    if lam < 0:
        raise ParameterError(f"lambda must be non-negative, got {lam}")
    residual, w = as_matrix(residual, "update_sparse_l0"), as_matrix(w, "update_sparse_l0")
    _check_same("update_sparse_l0", residual, w)
    keep = np.square(residual) > lam * np.square(w)
    return np.where(keep, residual, 0.0)


def update_u(y, s, u_prev, v, t: float) -> DenseMatrix:
    """
    Proximal update U+ = [t U + (Y - S) V^T] [V V^T + t I]^-1, computed as an
    SPD solve on the transposed system.
    """
    if not t > 0:
        raise ParameterError(f"proximal parameter t must be positive, got {t}")
    y, s, u_prev, v = (as_matrix(a, "update_u") for a in (y, s, u_prev, v))
    _check_factor_dims("update_u", y, u_prev, v)
    _check_same("update_u", y, s)

    rank = v.shape[0]
    gram = matmul(v, transpose(v)) + t * np.eye(rank)
    rhs = t * u_prev + matmul(y - s, transpose(v))
    return transpose(spd_solve(gram, transpose(rhs)))


def update_v(y, s, u, v_prev, t: float) -> DenseMatrix:
    """
    Proximal update V+ = [t I + U^T U]^-1 [t V + U^T (Y - S)].
    """
    if not t > 0:
        raise ParameterError(f"proximal parameter t must be positive, got {t}")
    y, s, u, v_prev = (as_matrix(a, "update_v") for a in (y, s, u, v_prev))
    _check_factor_dims("update_v", y, u, v_prev)
    _check_same("update_v", y, s)

    rank = u.shape[1]
    gram = matmul(transpose(u), u) + t * np.eye(rank)
    rhs = t * v_prev + matmul(transpose(u), y - s)
    return spd_solve(gram, rhs)


def gaussian_init(dims: Dims, rank: int, rng: np.random.Generator) -> FactorPair:
    u = rng.standard_normal((dims.rows, rank))
    v = rng.standard_normal((rank, dims.cols))
    return FactorPair(u=u, v=v)


def power_init(
    y: DenseMatrix, rank: int, rng: np.random.Generator, sweeps: int = 5
) -> FactorPair:
    """
    Spectral warm start by block power iteration on Y Y^T.

    The column space Q of Y G (G Gaussian) is refined by `sweeps` rounds of
    Q <- qr(Y Y^T Q), then U = c Q and V = Q^T Y / c with the scalar c chosen so
    U^T U and V V^T carry the same trace.
    """
    y = as_matrix(y, "power_init")
    q, _ = qr(y @ rng.standard_normal((y.shape[1], rank)), mode="economic")
    for _ in range(sweeps):
        q, _ = qr(y @ (y.T @ q), mode="economic")

    b = q.T @ y
    scale_sq = float(np.linalg.norm(b)) / np.sqrt(rank)
    scale = np.sqrt(scale_sq) if scale_sq > 0.0 else 1.0
    return FactorPair(u=np.ascontiguousarray(q * scale), v=np.ascontiguousarray(b / scale))


def stationarity_residuals(y, u, v, s) -> Tuple[float, float]:
    """
    Frobenius norms of (Y - UV - S) V^T and U^T (Y - UV - S), the partial
    gradients of 1/2 ||Y - UV - S||_F^2 in U and V up to sign.
    """
    y, u, v, s = (as_matrix(a, "stationarity_residuals") for a in (y, u, v, s))
    _check_factor_dims("stationarity_residuals", y, u, v)
    _check_same("stationarity_residuals", y, s)
    r = y - matmul(u, v) - s
    return (
        float(np.linalg.norm(matmul(r, transpose(v)))),
        float(np.linalg.norm(matmul(transpose(u), r))),
    )


class WeightSnapshots:
    """
    Iteration observer that copies the weight matrix at the requested
    1-based iteration numbers.

    Usage:
        snapshots = WeightSnapshots([1, 10, 100])
        solve(y, config, on_iteration=snapshots)
        snapshots.taken[10]
    """

    def __init__(self, at: Iterable[int]):
        self.at = sorted(set(int(k) for k in at))
        if any(k < 1 for k in self.at):
            raise ParameterError("snapshot iterations are 1-based")
        self.taken: Dict[int, DenseMatrix] = {}

    def __call__(self, state: IterationState) -> None:
        number = state.iteration + 1
        if number in self.at:
            self.taken[number] = np.array(state.weights.w)


def _initial_factors(y: DenseMatrix, config: SolverConfig) -> FactorPair:
    rng = np.random.Generator(np.random.PCG64(config.seed))
    if config.init is InitScheme.POWER_ITERATION:
        return power_init(y, config.rank, rng, sweeps=config.power_sweeps)
    return gaussian_init(Dims.of(y), config.rank, rng)


def solve(
    y: DenseMatrix,
    config: SolverConfig,
    on_iteration: Optional[IterationObserver] = None,
) -> DecompositionResult:
    """
    Decompose Y into a rank-r product UV plus a sparse component S.

    The loop stops as converged when the relative objective change and the
    relative change of UV both fall below `config.tol` and both factor steps
    are at most 10 * tol; otherwise it runs `config.max_iter` iterations. The
    factor-step bound is an extra condition on top of the objective and
    product tests, so a converged run also ends with vanishing steps.

    Args:
        y (DenseMatrix): Data matrix (m x n).
        config (SolverConfig): Solver parameters.
        on_iteration (Optional[IterationObserver]): Called after every iteration.

    Returns:
        DecompositionResult: Final factors, sparse part, weights and trace.

    Raises:
        ParameterError: If the rank exceeds min(m, n).
        DomainError: If Y holds non-finite entries or the objective stops being finite.
    """
    y = as_matrix(y, "solve")
    m, n = y.shape
    if config.rank > min(m, n):
        raise ParameterError(f"rank {config.rank} exceeds min(m, n) = {min(m, n)}")

    l0 = config.variant is SparseVariant.L0
    update_sparse = update_sparse_l0 if l0 else update_sparse_l2
    evaluate = objective_l0 if l0 else objective
    lam, t = config.lam, config.prox_t

    factors = _initial_factors(y, config)
    u, v = factors.u, factors.v
    s = np.zeros_like(y)
    weights = init_weights(Dims.of(y), config.p)
    y_norm = float(np.linalg.norm(y))

    initial_objective = evaluate(y, u, v, s, weights.w, lam)
    j_prev = initial_objective
    uv_prev = matmul(u, v)
    trace = []
    termination = Termination.MAX_ITER

    logger.info(
        f"solve: {m}x{n}, rank {config.rank}, variant {config.variant.value}, "
        f"lambda {lam:g}, t {t:g}, p {config.p:g}, init {config.init.value}"
    )

    for k in range(config.max_iter):
        new_weights = update_weights(weights, s)
        delta_w = max_weight_change(weights.w, new_weights.w)
        weights = new_weights

        s = update_sparse(y - uv_prev, weights.w, lam)
        u_new = update_u(y, s, u, v, t)
        v_new = update_v(y, s, u_new, v, t)

        delta_u = float(np.linalg.norm(u_new - u))
        delta_v = float(np.linalg.norm(v_new - v))
        uv = matmul(u_new, v_new)
        j = evaluate(y, u_new, v_new, s, weights.w, lam)
        if not np.isfinite(j):
            raise DomainError(f"solve: objective is not finite at iteration {k}")

        record = TraceRecord(
            iteration=k, objective=j, delta_u=delta_u, delta_v=delta_v, delta_w=delta_w
        )
        trace.append(record)
        u, v = u_new, v_new

        if on_iteration is not None:
            on_iteration(
                IterationState(iteration=k, u=u, v=v, s=s, weights=weights, record=record)
            )
        if (k + 1) % config.log_every == 0:
            logger.debug(
                f"iteration {k + 1}: J {j:.6e}, dU {delta_u:.3e}, dV {delta_v:.3e}, dW {delta_w:.3e}"
            )

        rel_objective = abs(j_prev - j) / (1.0 + j_prev)
        rel_product = float(np.linalg.norm(uv - uv_prev)) / (1.0 + y_norm)
        j_prev, uv_prev = j, uv
        if (
            max(rel_objective, rel_product) < config.tol
            and max(delta_u, delta_v) <= 10.0 * config.tol
        ):
            termination = Termination.CONVERGED
            break

    logger.info(
        f"solve: {termination.value} after {len(trace)} iterations, J {j_prev:.6e}"
    )
    return DecompositionResult(
        factors=FactorPair(u=u, v=v),
        sparse=s,
        weights=weights,
        trace=trace,
        initial_objective=initial_objective,
        iterations=len(trace),
        termination=termination,
    )
