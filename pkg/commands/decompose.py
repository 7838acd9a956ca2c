"""
commands/decompose.py

`decompose`: split a stored matrix into low-rank and sparse parts and write
`<prefix>_X`, `<prefix>_S`, `<prefix>_W` (plus the optional trace and weight
snapshots). The final objective, iteration count, termination reason and
stationarity residuals are printed on stdout.

Functions:
    - register: Add the sub-command parser.
    - cmd_decompose: Handle the sub-command.
"""

import argparse

from commands._options import (
    add_format_flag,
    add_solver_flags,
    number_list,
    solver_config,
    split_prefix,
)
from configs.settings import Settings
from repositories import MatrixRepo, ReportRepo
from services import DecompositionService


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "decompose", help="decompose a matrix file into low-rank and sparse parts"
    )
    parser.add_argument("--input", required=True, help="matrix file (CSV or MAT1)")
    parser.add_argument(
        "--out-prefix",
        default=str(settings.results_dir / "decompose"),
        help=f"output path prefix (default: {settings.results_dir / 'decompose'})",
    )
    parser.add_argument("--trace", action="store_true", help="also write <prefix>_trace.csv")
    parser.add_argument(
        "--snapshots",
        type=number_list(int),
        default=[],
        help="1-based iterations at which W is saved as <prefix>_W_iter<k>",
    )
    add_format_flag(parser, settings)
    add_solver_flags(parser)
    parser.set_defaults(handler=cmd_decompose)


def cmd_decompose(args: argparse.Namespace, settings: Settings) -> int:
    config = solver_config(args)
    directory, stem = split_prefix(args.out_prefix)
    service = DecompositionService(
        MatrixRepo(directory, fmt=args.format), ReportRepo(directory)
    )

    y = service.load(args.input)
    result, snapshots = service.decompose(y, config, snapshots=args.snapshots)
    service.save(result, stem, trace=args.trace, snapshots=snapshots)
    grad_u, grad_v = service.residuals(y, result)

    print(f"objective\t{result.final_objective!r}")
    print(f"iterations\t{result.iterations}")
    print(f"termination\t{result.termination.value}")
    print(f"stationarity_u\t{grad_u!r}")
    print(f"stationarity_v\t{grad_v!r}")
    return 0
