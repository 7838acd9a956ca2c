"""
services/_bench_service.py

This module runs benchmark grids of synthetic instances through the solver and
summarizes the resulting reports.

Functions:
    - run_bench: Run every grid cell for every trial and collect a report.

Classes:
    - BenchService: Runs, summarizes and stores benchmark reports.
"""

import math
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger

from algorithms import cell_seed, generate_instance, rmse, solve
from models import (
    BenchCell,
    BenchRecord,
    BenchReport,
    BenchSummaryRow,
    SolverConfig,
)
from repositories import ReportRepo

CellTask = Tuple[BenchCell, int, SolverConfig, int, bool]


def _run_cell(task: CellTask) -> BenchRecord:
    """
    Top-level picklable worker: generate the instance of one cell and trial,
    solve it and score the result. Failures are returned as records.
    """
    cell, trial, defaults, base_seed, timing = task
    spec = cell.spec
    base = dict(
        m=spec.m,
        n=spec.n,
        sparsity=spec.sparsity,
        snr=spec.snr,
        trial=trial,
        variant=cell.variant,
    )
    try:
        seed = cell_seed(base_seed, spec.m, spec.n, spec.sparsity, spec.snr, trial)
        instance = generate_instance(spec.model_copy(update={"seed": seed}))
        config = SolverConfig(
            **{**defaults.model_dump(), "rank": spec.rank, "variant": cell.variant}
        )
        started = time.perf_counter()
        result = solve(instance.y, config)
        elapsed = time.perf_counter() - started
        return BenchRecord(
            **base,
            rmse_x=rmse(result.low_rank, instance.x_true),
            rmse_s=rmse(result.sparse, instance.s_true),
            iterations=result.iterations,
            wall_seconds=elapsed if timing else 0.0,
        )
    except Exception as e:
        logger.warning(f"bench cell {base} failed: {e}")
        return BenchRecord(**base, error=f"{type(e).__name__}: {e}")


def run_bench(
    grid: Sequence[BenchCell],
    trials: int,
    defaults: SolverConfig,
    base_seed: int,
    workers: int = 1,
    timing: bool = True,
) -> BenchReport:
    """
    Run every grid cell for `trials` trials.

    Each cell and trial draws its instance from a seed derived from
    (base_seed, m, n, sparsity, snr, trial), so the report does not depend on
    the number of workers or the order of execution. Records follow grid order,
    trials innermost.

    Args:
        grid (Sequence[BenchCell]): Instance specs with their sparse variants.
        trials (int): Trials per cell.
        defaults (SolverConfig): Solver parameters; rank and variant come from each cell.
        base_seed (int): Root of every cell seed.
        workers (int): Worker processes; 1 runs in-process.
        timing (bool): Record wall-clock seconds, or 0.0 for byte-reproducible reports.

    Returns:
        BenchReport: One record per cell and trial.
    """
    tasks: List[CellTask] = [
        (cell, trial, defaults, base_seed, timing) for cell in grid for trial in range(trials)
    ]
    if not tasks:
        return BenchReport()

    logger.info(f"bench: {len(grid)} cells x {trials} trials on {workers} worker(s)")
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            # map preserves input order
            records = list(ex.map(_run_cell, tasks))
    else:
        records = [_run_cell(task) for task in tasks]

    for record in records:
        if not record.failed:
            logger.info(
                f"cell m={record.m} n={record.n} sparsity={record.sparsity:g} snr={record.snr:g} "
                f"trial={record.trial} {record.variant.value}: rmse_x {record.rmse_x:.3e}"
            )
    return BenchReport(records=records)


def _mean(values: List[float]) -> float:
    return float(np.mean(values)) if values else math.nan


class BenchService:
    """
    Runs benchmark grids and stores their reports.

    Attributes:
        workers (int): Worker processes used by `run`.
    """

    def __init__(self, workers: int = 1):
        self.workers = workers

    def run(
        self,
        grid: Sequence[BenchCell],
        trials: int,
        defaults: SolverConfig,
        base_seed: int,
        timing: bool = True,
    ) -> BenchReport:
        return run_bench(grid, trials, defaults, base_seed, workers=self.workers, timing=timing)

    def save(self, report: BenchReport, path: Path) -> Path:
        repo = ReportRepo.for_path(path)
        return repo.create(Path(path).stem, report)

    @staticmethod
    def summarize(report: BenchReport) -> List[BenchSummaryRow]:
        """
        Group records by (m, n, sparsity, snr, variant) in first-seen order and
        average the metrics of the successful trials.
        """
        groups: Dict[tuple, List[BenchRecord]] = {}
        for record in report.records:
            key = (record.m, record.n, record.sparsity, record.snr, record.variant)
            groups.setdefault(key, []).append(record)

        rows = []
        for (m, n, sparsity, snr, variant), records in groups.items():
            ok = [r for r in records if not r.failed]
            rows.append(
                BenchSummaryRow(
                    m=m,
                    n=n,
                    sparsity=sparsity,
                    snr=snr,
                    variant=variant,
                    trials=len(records),
                    failures=len(records) - len(ok),
                    mean_rmse_x=_mean([r.rmse_x for r in ok]),
                    mean_rmse_s=_mean([r.rmse_s for r in ok]),
                    mean_iterations=_mean([r.iterations for r in ok]),
                    mean_wall_seconds=_mean([r.wall_seconds for r in ok]),
                )
            )
        return rows

    @staticmethod
    def format_summary(rows: List[BenchSummaryRow]) -> str:
        header = (
            "m",
            "n",
            "sparsity",
            "snr",
            "variant",
            "trials",
            "failed",
            "rmse_x",
            "rmse_s",
            "iters",
            "seconds",
        )
        lines = [header]
        for row in rows:
            lines.append(
                (
                    str(row.m),
                    str(row.n),
                    f"{row.sparsity:g}",
                    f"{row.snr:g}",
                    row.variant.value,
                    str(row.trials),
                    str(row.failures),
                    f"{row.mean_rmse_x:.3e}",
                    f"{row.mean_rmse_s:.3e}",
                    f"{row.mean_iterations:.1f}",
                    f"{row.mean_wall_seconds:.3f}",
                )
            )
        widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
        return "\n".join(
            "  ".join(cell.rjust(width) for cell, width in zip(line, widths)) for line in lines
        )
