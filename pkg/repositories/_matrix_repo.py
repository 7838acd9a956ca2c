"""
_matrix_repo.py

This module contains the MatrixRepo class, which stores dense matrices as CSV
or MAT1 files.

Classes:
    - MatrixRepo: Repository for matrix files.
"""

from pathlib import Path
from typing import Literal, Union

from models import DenseMatrix
from repositories._base_repo import BaseRepo
from utils import converter

MatrixFormat = Literal["csv", "mat1"]

FORMAT_SUFFIXES = {"csv": ".csv", "mat1": ".mat1"}


class MatrixRepo(BaseRepo[DenseMatrix]):
    """
    Repository for matrix files. Writes use the configured format; reads
    accept either format by sniffing the MAT1 magic.

    Attributes:
        fmt (MatrixFormat): Output format.
    """

    SUFFIX = ".csv"

    def __init__(self, root: Union[str, Path], fmt: MatrixFormat = "csv"):
        super().__init__(root)
        if fmt not in FORMAT_SUFFIXES:
            raise ValueError(f"unknown matrix format {fmt!r}")
        self.fmt = fmt
        self.suffix = FORMAT_SUFFIXES[fmt]

    def encode(self, data: DenseMatrix) -> bytes:
        if self.fmt == "mat1":
            return converter.matrix2mat1(data)
        return converter.matrix2csv(data)

    def decode(self, source: bytes) -> DenseMatrix:
        return converter.bytes2matrix(source)
