"""
configs/settings.py

This module loads the environment-driven settings of the application. The
`.env.<ENV>` file is read when the `ENV` variable is set, otherwise plain
environment variables are used.

Functions:
    - load_settings: Load the dotenv file (if any) and build a Settings instance.
"""

import os
import sys
from pathlib import Path
from typing import Literal

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field

from configs import paths


class Settings(BaseModel):
    """
    Ambient settings of the command line tool.

    Attributes:
        log_level (str): Minimum level of the loguru sink.
        bench_workers (int): Worker processes used by the benchmark grid.
        matrix_format (str): Default on-disk matrix format ("csv" or "mat1").
        results_dir (Path): Default directory for generated artifacts.
    """

    model_config = ConfigDict(frozen=True)

    log_level: str = "INFO"
    bench_workers: int = Field(1, ge=1)
    matrix_format: Literal["csv", "mat1"] = "csv"
    results_dir: Path = paths.RESULTS


def load_settings() -> Settings:
    """
    Load environment variables and build the application settings.

    Returns:
        Settings: The settings resolved from the environment.

    Raises:
        ValidationError: If a variable holds a malformed value.
    """
    env_fname = f".env.{os.getenv('ENV')}" if os.getenv("ENV") else None
    if env_fname is not None:
        # logging is not configured yet; stdout is reserved for results
        print(f'using .env file "{env_fname}"', file=sys.stderr)
        load_dotenv(env_fname)

    return Settings.model_validate(
        {
            "log_level": os.getenv("AWLS_LOG_LEVEL", "INFO"),
            "bench_workers": os.getenv("AWLS_BENCH_WORKERS", "1"),
            "matrix_format": os.getenv("AWLS_MATRIX_FORMAT", "csv"),
            "results_dir": os.getenv("AWLS_RESULTS_DIR", str(paths.RESULTS)),
        }
    )
