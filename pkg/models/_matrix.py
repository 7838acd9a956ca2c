"""
models/_matrix.py

This module defines the dense matrix carrier and its dimension model.
A DenseMatrix is a 2-D, C-ordered (row-major) `numpy.ndarray` of float64 with
at least one row and one column and only finite entries.

Classes:
    - Dims: Positive row/column counts of a matrix.
"""

from typing import Tuple

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, PositiveInt

DenseMatrix = npt.NDArray[np.float64]


class Dims(BaseModel):
    """
    Positive row/column counts of a matrix.

    Attributes:
        rows (int): Number of rows.
        cols (int): Number of columns.
    """

    model_config = ConfigDict(frozen=True)

    rows: PositiveInt
    cols: PositiveInt

    @classmethod
    def of(cls, matrix: np.ndarray) -> "Dims":
        return cls(rows=matrix.shape[0], cols=matrix.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)
