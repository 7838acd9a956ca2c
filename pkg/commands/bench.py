"""
commands/bench.py

`bench`: run a grid of synthetic instances (square sizes x sparsities x SNRs)
through the solver, write the per-trial report (CSV or JSON by suffix) and
print a per-cell summary table.

Functions:
    - register: Add the sub-command parser.
    - build_grid: Expand the grid flags into bench cells.
    - cmd_bench: Handle the sub-command.
"""

import argparse
from pathlib import Path
from typing import List

from commands._options import add_solver_flags, number_list, solver_config
from configs.settings import Settings
from models import BenchCell, SparseVariant, SynthSpec
from services import BenchService
from utils.errors import ParameterError

VARIANT_CHOICES = ("l2", "l0", "both")


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser("bench", help="run the synthetic benchmark grid")
    parser.add_argument(
        "--sizes",
        type=number_list(int),
        default="500,1000",
        help="square sizes m = n (default: 500,1000)",
    )
    parser.add_argument(
        "--sparsities",
        type=number_list(float),
        default="0.1",
        help="sparsity levels (default: 0.1)",
    )
    parser.add_argument(
        "--snrs",
        type=number_list(float),
        default="1,3,6,9,12,15",
        help="SNR levels (default: 1,3,6,9,12,15)",
    )
    parser.add_argument("--snr-db", action="store_true", help="read --snrs in decibels")
    parser.add_argument("--trials", type=int, default=1, help="trials per cell (default: 1)")
    parser.add_argument(
        "--variant",
        dest="bench_variant",
        choices=VARIANT_CHOICES,
        default="l2",
        help="sparse penalty (default: l2)",
    )
    parser.add_argument(
        "--out",
        default=str(settings.results_dir / "bench.csv"),
        help=f"report path, .csv or .json (default: {settings.results_dir / 'bench.csv'})",
    )
    parser.add_argument(
        "--workers",
        type=int,
        default=settings.bench_workers,
        help=f"worker processes (default: {settings.bench_workers})",
    )
    parser.add_argument(
        "--no-timing",
        action="store_true",
        help="write 0.0 wall seconds so repeated runs give byte-identical reports",
    )
    add_solver_flags(parser, rank=False, variant=False)
    parser.set_defaults(handler=cmd_bench)


def build_grid(args: argparse.Namespace) -> List[BenchCell]:
    if args.bench_variant == "both":
        variants = [SparseVariant.L2, SparseVariant.L0]
    else:
        variants = [SparseVariant(args.bench_variant)]
    return [
        BenchCell(
            spec=SynthSpec(m=size, n=size, sparsity=sparsity, snr=snr, db=args.snr_db),
            variant=variant,
        )
        for size in args.sizes
        for sparsity in args.sparsities
        for snr in args.snrs
        for variant in variants
    ]


def cmd_bench(args: argparse.Namespace, settings: Settings) -> int:
    if args.trials < 1:
        raise ParameterError(f"--trials must be at least 1, got {args.trials}")
    if args.workers < 1:
        raise ParameterError(f"--workers must be at least 1, got {args.workers}")
    out = Path(args.out)
    if out.suffix.lower() not in (".csv", ".json"):
        raise ParameterError(f"--out must end in .csv or .json, got {out.name}")

    grid = build_grid(args)
    if not grid:
        raise ParameterError("the benchmark grid is empty")
    seed = args.seed if args.seed is not None else 0
    defaults = solver_config(args, seed=seed)

    service = BenchService(workers=args.workers)
    report = service.run(grid, args.trials, defaults, base_seed=seed, timing=not args.no_timing)
    service.save(report, out)
    print(service.format_summary(service.summarize(report)))
    return 0
