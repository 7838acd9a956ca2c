"""
algorithms/_synthetic.py

Synthetic low-rank plus sparse instances and the metrics used to score a
decomposition against them. All randomness flows from `numpy.random.PCG64`
generators seeded explicitly, so instances are bit-identical across runs and
platforms.

Functions:
    - gen_lowrank: Gaussian factors and their rank-r product.
    - scale_noise: Rescale dense noise to a target signal-to-noise ratio.
    - gen_sparse_noise: Dense Gaussian noise at a target SNR, masked by Bernoulli sampling.
    - generate_instance: Full instance Y = X + S with ground truth.
    - cell_seed: Per-cell seed derived from a base seed, the cell parameters and the trial.
    - rmse / snr_of: Quality metrics.
    - classify_support / support_accuracy / support_f1: Outlier-support scoring.
"""

import struct
from typing import Tuple

import numpy as np

from kernels import as_matrix, frob_norm_sq, matmul
from models import DenseMatrix, SynthInstance, SynthSpec
from utils.errors import DomainError, ParameterError, ShapeError

NOISE_STREAM = 1


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def _noise_seed(seed: int) -> int:
    sequence = np.random.SeedSequence(seed, spawn_key=(NOISE_STREAM,))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def _power_ratio(snr: float, db: bool) -> float:
    return 10.0 ** (snr / 10.0) if db else 10.0**snr


def gen_lowrank(spec: SynthSpec) -> Tuple[DenseMatrix, DenseMatrix, DenseMatrix]:
    """
    Draw U (m x r) and V (r x n) with i.i.d. standard normal entries.

    Returns:
        Tuple[DenseMatrix, DenseMatrix, DenseMatrix]: (u, v, x = u v).

    Raises:
        ParameterError: If the rank exceeds min(m, n).
    """
    if spec.rank > min(spec.m, spec.n):
        raise ParameterError(
            f"rank {spec.rank} exceeds min(m, n) = {min(spec.m, spec.n)}"
        )
    rng = _rng(spec.seed)
    u = rng.standard_normal((spec.m, spec.rank))
    v = rng.standard_normal((spec.rank, spec.n))
    return u, v, matmul(u, v)


def scale_noise(x: DenseMatrix, noise: DenseMatrix, snr: float, db: bool = False) -> DenseMatrix:
    """
    Rescale `noise` so that log10(||x||^2 / ||noise||^2) equals `snr`
    (or 10 log10 when `db` is set).

    Raises:
        DomainError: If either operand has zero norm.
    """
    signal_power = frob_norm_sq(x)
    noise_power = frob_norm_sq(noise)
    if signal_power == 0.0 or noise_power == 0.0:
        raise DomainError("signal-to-noise ratio is undefined for a zero-norm operand")
    target = signal_power / _power_ratio(snr, db)
    return noise * np.sqrt(target / noise_power)


def gen_sparse_noise(
    x: DenseMatrix, sparsity: float, snr: float, seed: int, db: bool = False
) -> Tuple[DenseMatrix, np.ndarray]:
    """
    Draw dense Gaussian noise M at the requested SNR against `x`, then keep
    each entry independently with probability `sparsity`.

    Returns:
        Tuple[DenseMatrix, np.ndarray]: (s = M o mask, boolean mask).

    Raises:
        ParameterError: If sparsity is not in (0, 1).
        DomainError: If `x` is all zeros.
    """
    if not 0.0 < sparsity < 1.0:
        raise ParameterError(f"sparsity must lie in (0, 1), got {sparsity}")
    x = as_matrix(x, "gen_sparse_noise")
    if not x.any():
        raise DomainError("signal-to-noise ratio is undefined for an all-zero signal")

    rng = _rng(seed)
    noise = scale_noise(x, rng.standard_normal(x.shape), snr, db)
    mask = rng.random(x.shape) < sparsity
    return np.where(mask, noise, 0.0), mask


def generate_instance(spec: SynthSpec) -> SynthInstance:
    _, _, x = gen_lowrank(spec)
    s, mask = gen_sparse_noise(x, spec.sparsity, spec.snr, _noise_seed(spec.seed), spec.db)
    return SynthInstance(x_true=x, s_true=s, y=x + s, support=mask)


def cell_seed(
    base_seed: int, m: int, n: int, sparsity: float, snr: float, trial: int
) -> int:
    """
    Seed of one benchmark cell and trial. Floats enter the key through their
    IEEE-754 bit patterns, so the mapping is exact and order independent.
    """
    key = (
        m,
        n,
        struct.unpack("<Q", struct.pack("<d", float(sparsity)))[0],
        struct.unpack("<Q", struct.pack("<d", float(snr)))[0],
        trial,
    )
    sequence = np.random.SeedSequence(base_seed, spawn_key=key)
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def rmse(a: DenseMatrix, b: DenseMatrix) -> float:
    a, b = as_matrix(a, "rmse"), as_matrix(b, "rmse")
    if a.shape != b.shape:
        raise ShapeError("rmse", a.shape, b.shape)
    return float(np.sqrt(frob_norm_sq(a - b) / a.size))


def snr_of(x: DenseMatrix, m_noise: DenseMatrix, db: bool = False) -> float:
    """
    log10(||x||^2 / ||m_noise||^2), or 10 log10 of the same ratio when `db` is set.

    Raises:
        DomainError: If either operand has zero norm.
    """
    signal_power = frob_norm_sq(x)
    noise_power = frob_norm_sq(m_noise)
    if signal_power == 0.0 or noise_power == 0.0:
        raise DomainError("signal-to-noise ratio is undefined for a zero-norm operand")
    ratio = np.log10(signal_power / noise_power)
    return float(10.0 * ratio if db else ratio)


def classify_support(w: DenseMatrix, threshold: float = 0.5) -> np.ndarray:
    """Outlier mask: entries whose final weight fell below `threshold`."""
    return np.asarray(w) < threshold


def support_accuracy(mask: np.ndarray, truth: np.ndarray) -> float:
    if np.shape(mask) != np.shape(truth):
        raise ShapeError("support_accuracy", np.shape(mask), np.shape(truth))
    return float(np.mean(np.asarray(mask, dtype=bool) == np.asarray(truth, dtype=bool)))


def support_f1(mask: np.ndarray, truth: np.ndarray) -> float:
    if np.shape(mask) != np.shape(truth):
        raise ShapeError("support_f1", np.shape(mask), np.shape(truth))
    mask, truth = np.asarray(mask, dtype=bool), np.asarray(truth, dtype=bool)
    hits = int(np.sum(mask & truth))
    predicted, actual = int(mask.sum()), int(truth.sum())
    if predicted + actual == 0:
        return 1.0
    return 2.0 * hits / (predicted + actual)
