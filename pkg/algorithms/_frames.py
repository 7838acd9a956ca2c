"""
algorithms/_frames.py

Frame-stack pipeline: vectorize grayscale frames into the columns of a data
matrix, decompose it, and fold the low-rank and sparse parts back into
background and foreground frames.

Functions:
    - stack_frames: Frames -> (height * width) x F matrix, row-major scan order per column.
    - unstack: Inverse of stack_frames.
    - foreground_display: Map |S| onto [0, 255] for viewing.
    - decompose_stack: Run the solver on a stack and build background/foreground stacks.
"""

from typing import List, Optional

import numpy as np
from loguru import logger

from algorithms._solver import IterationObserver, solve
from kernels import as_matrix
from models import DenseMatrix, FrameStack, SolverConfig, StackDecomposition
from utils.errors import ShapeError

GRAY_MAX = 255.0


def stack_frames(stack: FrameStack) -> DenseMatrix:
    shape = (stack.height, stack.width)
    for frame in stack.frames:
        if np.shape(frame) != shape:
            raise ShapeError("stack_frames", shape, np.shape(frame))
    return np.ascontiguousarray(
        np.stack([np.asarray(frame, dtype=np.float64).ravel() for frame in stack.frames], axis=1)
    )


def unstack(
    y: DenseMatrix, height: int, width: int, names: Optional[List[str]] = None
) -> FrameStack:
    y = as_matrix(y, "unstack")
    if y.shape[0] != height * width:
        raise ShapeError(
            "unstack", y.shape, (height, width), detail="rows must equal height * width"
        )
    frames = [np.ascontiguousarray(y[:, j].reshape(height, width)) for j in range(y.shape[1])]
    return FrameStack(height=height, width=width, frames=frames, names=names or [])


def foreground_display(s: DenseMatrix) -> DenseMatrix:
    """
    Map |S| affinely onto [0, 255] over the whole stack: the smallest
    magnitude goes to 0 and the largest to 255. A constant |S| maps to 0.
    """
    magnitude = np.abs(s)
    low, high = float(magnitude.min()), float(magnitude.max())
    if high == low:
        return np.zeros_like(magnitude)
    return GRAY_MAX * (magnitude - low) / (high - low)


def decompose_stack(
    stack: FrameStack,
    config: Optional[SolverConfig] = None,
    on_iteration: Optional[IterationObserver] = None,
) -> StackDecomposition:
    """
    Decompose a frame stack into a low-rank background and a sparse foreground.

    Args:
        stack (FrameStack): Input frames.
        config (Optional[SolverConfig]): Solver parameters; rank 1 when omitted.
        on_iteration (Optional[IterationObserver]): Forwarded to the solver.

    Returns:
        StackDecomposition: Background frames (columns of UV), display-scaled
        foreground frames (|S| on [0, 255]) and the raw solver result.
    """
    config = config or SolverConfig(rank=1)
    y = stack_frames(stack)
    logger.info(
        f"decompose_stack: {len(stack)} frames of {stack.height}x{stack.width}, rank {config.rank}"
    )
    result = solve(y, config, on_iteration=on_iteration)
    names = stack.frame_names()
    background = unstack(result.low_rank, stack.height, stack.width, names)
    foreground = unstack(foreground_display(result.sparse), stack.height, stack.width, names)
    return StackDecomposition(background=background, foreground=foreground, result=result)
