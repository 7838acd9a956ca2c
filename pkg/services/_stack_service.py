"""
services/_stack_service.py

This module defines the service behind the frame-stack pipeline: read a
directory of PGM frames, decompose it, and write background and foreground
frame sequences.

Classes:
    - StackService: Runs the frame-stack pipeline between two directories.
"""

from pathlib import Path
from typing import Optional

from loguru import logger

from algorithms import decompose_stack
from models import SolverConfig, StackDecomposition
from repositories import FrameRepo, MatrixRepo


class StackService:
    """
    Runs the frame-stack pipeline.

    Attributes:
        frames (FrameRepo): Source frame directory.
        output (FrameRepo): Destination of `bg_<name>.pgm` and `fg_<name>.pgm`.
        matrices (Optional[MatrixRepo]): Destination of the raw sparse dump, if requested.
    """

    def __init__(
        self,
        frames: FrameRepo,
        output: FrameRepo,
        matrices: Optional[MatrixRepo] = None,
    ):
        self.frames = frames
        self.output = output
        self.matrices = matrices

    def run(self, config: SolverConfig) -> StackDecomposition:
        stack = self.frames.load_stack()
        decomposition = decompose_stack(stack, config)

        self.output.save_stack(decomposition.background, prefix="bg")
        self.output.save_stack(decomposition.foreground, prefix="fg")
        if self.matrices is not None:
            self.matrices.create("S_raw", decomposition.result.sparse)

        logger.info(
            f'Wrote {len(stack)} background and {len(stack)} foreground frames to "{self.output.root}"'
        )
        return decomposition

    @property
    def output_dir(self) -> Path:
        return self.output.root
