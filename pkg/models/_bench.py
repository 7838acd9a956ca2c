"""
models/_bench.py

This module defines the synthetic-instance and benchmark data models.

Classes:
    - SynthSpec: Parameters of one synthetic low-rank plus sparse instance.
    - SynthInstance: A generated instance with its ground truth.
    - BenchCell: One grid entry of a benchmark (instance spec plus sparse variant).
    - BenchRecord: Outcome of one grid cell and trial.
    - BenchReport: Ordered collection of records.
"""

import math
from typing import List, Optional

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, model_validator

from models._matrix import DenseMatrix
from models._solver import SparseVariant

BENCH_FIELDS = (
    "m",
    "n",
    "sparsity",
    "snr",
    "trial",
    "variant",
    "rmse_x",
    "rmse_s",
    "iterations",
    "wall_seconds",
    "error",
)


def default_rank(m: int) -> int:
    return max(1, m // 50)


class SynthSpec(BaseModel):
    """
    Parameters of one synthetic instance.

    Attributes:
        m (int): Rows.
        n (int): Columns.
        rank (int): Rank of the low-rank part; defaults to m // 50 (at least 1).
        sparsity (float): Bernoulli probability of an outlier entry, in (0, 1).
        snr (float): Target signal-to-noise ratio of the dense pre-mask noise.
        db (bool): Interpret snr in decibels (10 log10) instead of plain log10.
        seed (int): Seed of the instance RNG.
    """

    model_config = ConfigDict(frozen=True)

    m: PositiveInt
    n: PositiveInt
    rank: Optional[PositiveInt] = None
    sparsity: float = Field(gt=0.0, lt=1.0)
    snr: float
    db: bool = False
    seed: int = Field(default=0, ge=0, lt=2**64)

    @model_validator(mode="before")
    @classmethod
    def _fill_rank(cls, data):
        if isinstance(data, dict) and data.get("rank") is None and "m" in data:
            data = {**data, "rank": default_rank(int(data["m"]))}
        return data

    @model_validator(mode="after")
    def _check_snr(self) -> "SynthSpec":
        if not math.isfinite(self.snr):
            raise ValueError("snr must be finite")
        return self


class SynthInstance(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x_true: DenseMatrix
    s_true: DenseMatrix
    y: DenseMatrix
    support: npt.NDArray[np.bool_]


class BenchCell(BaseModel):
    model_config = ConfigDict(frozen=True)

    spec: SynthSpec
    variant: SparseVariant = SparseVariant.L2


class BenchRecord(BaseModel):
    """
    Outcome of one grid cell and trial. Failed cells keep NaN metrics,
    zero iterations and a non-empty `error`.
    """

    model_config = ConfigDict(frozen=True)

    m: PositiveInt
    n: PositiveInt
    sparsity: float
    snr: float
    trial: NonNegativeInt
    variant: SparseVariant
    rmse_x: float = math.nan
    rmse_s: float = math.nan
    iterations: NonNegativeInt = 0
    wall_seconds: float = Field(default=0.0, ge=0.0)
    error: str = ""

    @property
    def failed(self) -> bool:
        return bool(self.error)


class BenchReport(BaseModel):
    records: List[BenchRecord] = Field(default_factory=list)

    def __len__(self) -> int:
        return len(self.records)


class BenchSummaryRow(BaseModel):
    """
    Per-cell means over the successful trials of a report.
    """

    model_config = ConfigDict(frozen=True)

    m: PositiveInt
    n: PositiveInt
    sparsity: float
    snr: float
    variant: SparseVariant
    trials: NonNegativeInt
    failures: NonNegativeInt
    mean_rmse_x: float
    mean_rmse_s: float
    mean_iterations: float
    mean_wall_seconds: float
