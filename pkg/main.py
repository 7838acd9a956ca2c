"""
main.py

This module is the entry point of the command line tool. It is responsible for:
1. Loading environment variables and settings
2. Building the argument parser and registering the sub-commands
3. Configuring logging
4. Running the selected sub-command and mapping failures to exit codes

Exit codes:
    0 success, 2 usage error, 3 I/O or format error, 4 numerical failure.

Usage:
    $ python main.py synth --m 500 --n 500 --sparsity 0.264 --snr 10 --seed 7 --out-prefix fig1
    $ python main.py decompose --input fig1_Y.csv --rank 10 --preset tuned --trace
    $ python main.py bench --sizes 500 --snrs 1,3,6,9,12,15 --trials 3 --out report.csv
    $ python main.py stack-decompose --frames frames/ --out separated/
"""

import argparse
import sys
from typing import List, Optional

from loguru import logger
from pydantic import ValidationError

from commands import COMMANDS
from configs.settings import Settings, load_settings
from utils.errors import (
    DomainError,
    FormatError,
    NotPositiveDefiniteError,
    ParameterError,
    ShapeError,
)
from utils.logger import init_logging

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="awls",
        description="Adaptive weighted least squares low-rank plus sparse decomposition.",
    )
    parser.add_argument(
        "--log-level",
        default=settings.log_level,
        help=f"log level of the stderr sink (default: {settings.log_level})",
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    for command in COMMANDS:
        command.register(subparsers, settings)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        settings = load_settings()
    except ValueError as e:
        print(f"awls: error: invalid settings: {e}", file=sys.stderr)
        return EXIT_USAGE

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    try:
        init_logging(args.log_level)
    except ValueError as e:
        print(f"awls: error: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args, settings)
    except (ParameterError, ValidationError) as e:
        logger.error(f"usage: {e}")
        return EXIT_USAGE
    except (FormatError, ShapeError, OSError) as e:
        logger.error(f"i/o: {e}")
        return EXIT_IO
    except (NotPositiveDefiniteError, DomainError) as e:
        logger.error(f"numerical: {e}")
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
