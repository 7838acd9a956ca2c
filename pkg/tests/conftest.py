import numpy as np
import pytest

from models import FrameStack


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(20240611))


@pytest.fixture
def lowrank_matrix(rng):
    """Exactly rank-2, 40 x 30."""
    return rng.standard_normal((40, 2)) @ rng.standard_normal((2, 30))


def moving_block_video(frames=20, size=32, block=6, seed=3):
    """
    Static random background in [40, 140] with a 255-valued block moving
    one pixel down the diagonal per frame. Returns (stack, background, masks).
    """
    gen = np.random.Generator(np.random.PCG64(seed))
    background = np.floor(gen.uniform(40.0, 140.0, size=(size, size)))
    out, masks = [], []
    for j in range(frames):
        frame = background.copy()
        mask = np.zeros((size, size), dtype=bool)
        mask[j : j + block, j : j + block] = True
        frame[mask] = 255.0
        out.append(frame)
        masks.append(mask)
    return FrameStack(height=size, width=size, frames=out), background, masks


@pytest.fixture
def video():
    return moving_block_video()
