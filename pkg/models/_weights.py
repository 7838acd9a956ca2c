"""
models/_weights.py

This module defines the immutable state of the adaptive weight mechanism.

Classes:
    - WeightState: Current weight matrix, exponent and update counter.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, field_validator

from models._matrix import DenseMatrix


class WeightState(BaseModel):
    """
    Current weight matrix W, exponent p and update counter.

    The weight matrix is stored read-only; every update produces a new state.

    Attributes:
        w (DenseMatrix): Entrywise weights in [0, 1].
        p (float): Positive exponent applied to the scaling factor.
        step (int): Number of updates applied since initialization.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    w: DenseMatrix
    p: float = Field(gt=0)
    step: NonNegativeInt = 0

    @field_validator("w")
    @classmethod
    def _freeze_weights(cls, value: np.ndarray) -> np.ndarray:
        value = np.array(value, dtype=np.float64, order="C", copy=True)
        if value.ndim != 2 or value.size == 0:
            raise ValueError(f"weights must be a non-empty 2-D matrix, got {value.shape}")
        if not np.all((value >= 0.0) & (value <= 1.0)):
            raise ValueError("weights must lie in [0, 1]")
        value.flags.writeable = False
        return value
