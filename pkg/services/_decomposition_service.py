"""
services/_decomposition_service.py

This module defines the service that decomposes a stored matrix and writes the
low-rank estimate, the sparse part, the weights and optionally the trace and
weight snapshots.

Classes:
    - DecompositionService: Loads, solves and saves one decomposition.
"""

from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple

from loguru import logger

from algorithms import WeightSnapshots, solve, stationarity_residuals
from models import DecompositionResult, DenseMatrix, SolverConfig
from repositories import MatrixRepo, ReportRepo


class DecompositionService:
    """
    Decomposes a matrix into low-rank and sparse parts.

    Attributes:
        repo (MatrixRepo): Destination of the output matrices.
        reports (ReportRepo): Destination of the trace CSV.
    """

    def __init__(self, repository: MatrixRepo, reports: ReportRepo):
        self.repo = repository
        self.reports = reports

    def load(self, path: Path) -> DenseMatrix:
        return self.repo.read(path)

    def decompose(
        self,
        y: DenseMatrix,
        config: SolverConfig,
        snapshots: Iterable[int] = (),
    ) -> Tuple[DecompositionResult, Dict[int, DenseMatrix]]:
        """
        Run the solver, collecting weight snapshots at the requested 1-based iterations.
        """
        observer = WeightSnapshots(snapshots) if snapshots else None
        result = solve(y, config, on_iteration=observer)
        return result, (observer.taken if observer else {})

    def residuals(self, y: DenseMatrix, result: DecompositionResult) -> Tuple[float, float]:
        return stationarity_residuals(y, result.factors.u, result.factors.v, result.sparse)

    def save(
        self,
        result: DecompositionResult,
        prefix: str,
        trace: bool = False,
        snapshots: Optional[Dict[int, DenseMatrix]] = None,
    ) -> Dict[str, Path]:
        """
        Write `<prefix>_X`, `<prefix>_S`, `<prefix>_W`, optionally
        `<prefix>_trace.csv` and `<prefix>_W_iter<k>` per snapshot.
        """
        written = {
            "X": self.repo.create(f"{prefix}_X", result.low_rank),
            "S": self.repo.create(f"{prefix}_S", result.sparse),
            "W": self.repo.create(f"{prefix}_W", result.weights.w),
        }
        if trace:
            written["trace"] = self.reports.write_trace(
                result.trace, self.repo.root / f"{prefix}_trace.csv"
            )
        for k, w in sorted((snapshots or {}).items()):
            written[f"W_iter{k}"] = self.repo.create(f"{prefix}_W_iter{k}", w)
        if snapshots:
            logger.info(f"Saved {len(snapshots)} weight snapshots")
        return written
