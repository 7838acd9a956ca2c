"""
models/__init__.py

This module makes the data models available at the package level, so other
packages import them from `models` without knowing the defining module.

Imports:
    - Dims, DenseMatrix: Matrix carrier and its dimensions.
    - WeightState: Adaptive weight state.
    - SolverConfig, SparseVariant, InitScheme, Termination, FactorPair, TraceRecord,
      IterationState, DecompositionResult: Solver configuration and outputs.
    - SynthSpec, SynthInstance, BenchCell, BenchRecord, BenchReport, BenchSummaryRow: Synthetic data and benchmarks.
    - FrameStack, StackDecomposition: Frame-stack pipeline.
"""

from models._bench import (
    BENCH_FIELDS,
    BenchCell,
    BenchRecord,
    BenchReport,
    BenchSummaryRow,
    SynthInstance,
    SynthSpec,
    default_rank,
)
from models._matrix import DenseMatrix, Dims
from models._media import FrameStack, StackDecomposition
from models._solver import (
    DecompositionResult,
    FactorPair,
    InitScheme,
    IterationState,
    SolverConfig,
    SparseVariant,
    Termination,
    TraceRecord,
)
from models._weights import WeightState
