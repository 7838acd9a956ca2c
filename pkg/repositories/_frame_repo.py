"""
_frame_repo.py

This module contains the FrameRepo class, which reads and writes directories of
binary PGM frames.

Classes:
    - FrameRepo: Repository for grayscale frame directories.
"""

from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import List, Optional, Union

from models import DenseMatrix, FrameStack
from repositories._base_repo import ArtifactNotFoundError, BaseRepo
from utils import converter
from utils.errors import ShapeError
from utils.logger import logger


class FrameRepo(BaseRepo[DenseMatrix]):
    """
    Repository for a directory of `.pgm` frames. Frames are ordered
    lexicographically by file name.

    Attributes:
        workers (int): Threads used to decode frames.
    """

    SUFFIX = ".pgm"

    def __init__(self, root: Union[str, Path], workers: int = 4):
        super().__init__(root)
        self.workers = max(1, workers)

    def encode(self, data: DenseMatrix) -> bytes:
        return converter.write_pgm(data)

    def decode(self, source: bytes) -> DenseMatrix:
        return converter.read_pgm(source)

    def find_all(self) -> List[DenseMatrix]:
        names = self.names()
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return list(pool.map(self.find_by_name, names))

    def load_stack(self) -> FrameStack:
        """
        Read every frame of the directory into a stack.

        Raises:
            ArtifactNotFoundError: If the directory is missing or holds no `.pgm` files.
            FormatError: If a frame cannot be decoded.
            ShapeError: If frames differ in dimensions.
        """
        names = self.names()
        if not names:
            raise ArtifactNotFoundError(f'no "{self.suffix}" frames in "{self.root}"')
        frames = self.find_all()
        height, width = frames[0].shape
        for name, frame in zip(names, frames):
            if frame.shape != (height, width):
                raise ShapeError(
                    "load_stack", (height, width), frame.shape, detail=f"frame {name}"
                )
        logger.info(f'Read {len(frames)} frames of {height}x{width} from "{self.root}"')
        return FrameStack(height=height, width=width, frames=frames, names=names)

    def save_stack(self, stack: FrameStack, prefix: Optional[str] = None) -> List[Path]:
        """
        Write every frame as `<prefix>_<frame name>.pgm` (or `<frame name>.pgm`).
        """
        paths = []
        for name, frame in zip(stack.frame_names(), stack.frames):
            paths.append(self.create(f"{prefix}_{name}" if prefix else name, frame))
        return paths
