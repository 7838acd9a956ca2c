"""
models/_media.py

This module defines grayscale frame stacks and the result of decomposing one.

Classes:
    - FrameStack: Ordered grayscale frames of equal dimensions.
    - StackDecomposition: Background and foreground stacks plus the solver result.
"""

from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, PositiveInt, model_validator

from models._matrix import DenseMatrix
from models._solver import DecompositionResult


class FrameStack(BaseModel):
    """
    Ordered grayscale frames with pixel values as reals (nominally 0..255).

    Attributes:
        height (int): Pixel rows of every frame.
        width (int): Pixel columns of every frame.
        frames (List[DenseMatrix]): Frames, each height x width.
        names (List[str]): Optional frame names (file stems); empty or one per frame.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    height: PositiveInt
    width: PositiveInt
    frames: List[DenseMatrix]
    names: List[str] = []

    @model_validator(mode="after")
    def _check_frames(self) -> "FrameStack":
        if not self.frames:
            raise ValueError("a frame stack needs at least one frame")
        if self.names and len(self.names) != len(self.frames):
            raise ValueError(
                f"{len(self.names)} names given for {len(self.frames)} frames"
            )
        return self

    def __len__(self) -> int:
        return len(self.frames)

    def frame_names(self) -> List[str]:
        if self.names:
            return list(self.names)
        width = max(4, len(str(len(self.frames))))
        return [f"{i:0{width}d}" for i in range(len(self.frames))]


class StackDecomposition(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    background: FrameStack
    foreground: FrameStack
    result: DecompositionResult

    @property
    def foreground_energy(self) -> float:
        """Ratio ||S||_F / ||Y||_F of the raw sparse part to the reconstructed data."""
        y = self.result.low_rank + self.result.sparse
        denominator = float(np.linalg.norm(y))
        if denominator == 0.0:
            return 0.0
        return float(np.linalg.norm(self.result.sparse)) / denominator
