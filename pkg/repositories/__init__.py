"""
repositories.__init__.py

This module initializes the `repositories` package and provides direct access
to its classes and exceptions. Repositories move artifacts between the file
system and the in-memory models.

Imports:
    - ArtifactNotFoundError: Exception raised when a requested file or frame directory is missing.
    - MatrixRepo: Repository for CSV / MAT1 matrix files.
    - FrameRepo: Repository for directories of PGM frames.
    - ReportRepo: Repository for benchmark reports and solver traces.
"""

from repositories._base_repo import ArtifactNotFoundError, BaseRepo
from repositories._frame_repo import FrameRepo
from repositories._matrix_repo import MatrixRepo
from repositories._report_repo import ReportRepo
