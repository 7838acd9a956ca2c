"""
_base_repo.py

This module defines the abstract base class of the repository layer. A
repository owns one directory and persists artifacts of a single kind as files
named `<name><SUFFIX>`, delegating the byte encoding to its subclass.

Classes:
    - ArtifactNotFoundError: Exception raised when a requested artifact does not exist.
    - BaseRepo: Abstract base class for the repository classes.
"""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import Generic, List, TypeVar, Union

from utils import converter
from utils.logger import logger

T = TypeVar("T")


class ArtifactNotFoundError(FileNotFoundError):
    """
    Raised when a requested artifact (file or non-empty directory) does not exist.
    """

    pass


class BaseRepo(ABC, Generic[T]):
    """
    Abstract base class for the repository classes.

    Each subclass provides the byte codec of its artifact kind; naming, lookup
    and file I/O live here.

    Attributes:
        root (Path): Directory holding the artifacts.
        suffix (str): File suffix of the artifacts, including the dot.
    """

    def __init_subclass__(cls, **kwargs):
        """
        Ensure that subclasses define a SUFFIX class variable.
        """
        super().__init_subclass__(**kwargs)
        if not hasattr(cls, "SUFFIX"):
            raise NotImplementedError(
                f'{cls.__name__} must define a class variable named "SUFFIX"'
            )

    def __init__(self, root: Union[str, Path]):
        self.root = Path(root)
        self.suffix: str = self.__class__.SUFFIX
        logger.debug(f'{self.__class__.__name__} rooted at "{self.root}"')

    @abstractmethod
    def encode(self, data: T) -> bytes:
        raise NotImplementedError

    @abstractmethod
    def decode(self, source: bytes) -> T:
        raise NotImplementedError

    def path_of(self, name: str) -> Path:
        return self.root / f"{name}{self.suffix}"

    def create(self, name: str, data: T) -> Path:
        """
        Save the given data as `<root>/<name><suffix>`.

        Args:
            name (str): Artifact name without suffix.
            data (T): The data to be saved.

        Returns:
            Path: The written file.
        """
        path = converter.bytes2file(self.encode(data), self.path_of(name))
        logger.info(f'Wrote "{path}"')
        return path

    def find_by_name(self, name: str) -> T:
        """
        Load an artifact by name.

        Raises:
            ArtifactNotFoundError: If the file does not exist.
        """
        return self.read(self.path_of(name))

    def read(self, path: Union[str, Path]) -> T:
        path = Path(path)
        if not path.is_file():
            raise ArtifactNotFoundError(f'"{path}" does not exist')
        return self.decode(converter.file2bytes(path))

    def names(self) -> List[str]:
        """
        Names of the stored artifacts in lexicographic order of their file names.

        Raises:
            ArtifactNotFoundError: If the root directory does not exist.
        """
        if not self.root.is_dir():
            raise ArtifactNotFoundError(f'"{self.root}" is not a directory')
        paths = sorted(p.name for p in self.root.iterdir() if p.is_file() and p.suffix == self.suffix)
        return [name[: -len(self.suffix)] for name in paths]

    def find_all(self) -> List[T]:
        return [self.find_by_name(name) for name in self.names()]
