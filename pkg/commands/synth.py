"""
commands/synth.py

`synth`: generate a synthetic low-rank plus sparse instance and write
`<prefix>_Y`, `<prefix>_X` and `<prefix>_S`.

Functions:
    - register: Add the sub-command parser.
    - cmd_synth: Handle the sub-command.
"""

import argparse

from commands._options import add_format_flag, split_prefix
from configs.settings import Settings
from models import SynthSpec
from repositories import MatrixRepo
from services import SynthService


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "synth", help="generate a synthetic instance Y = X + S"
    )
    parser.add_argument("--m", type=int, required=True, help="rows")
    parser.add_argument("--n", type=int, required=True, help="columns")
    parser.add_argument(
        "--rank", type=int, default=None, help="rank of X (default: m // 50, at least 1)"
    )
    parser.add_argument(
        "--sparsity", type=float, required=True, help="outlier probability in (0, 1)"
    )
    parser.add_argument(
        "--snr", type=float, required=True, help="signal-to-noise ratio, log10 units"
    )
    parser.add_argument("--snr-db", action="store_true", help="read --snr in decibels")
    parser.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    parser.add_argument(
        "--out-prefix",
        default=str(settings.results_dir / "synth"),
        help=f"output path prefix (default: {settings.results_dir / 'synth'})",
    )
    add_format_flag(parser, settings)
    parser.set_defaults(handler=cmd_synth)


def cmd_synth(args: argparse.Namespace, settings: Settings) -> int:
    spec = SynthSpec(
        m=args.m,
        n=args.n,
        rank=args.rank,
        sparsity=args.sparsity,
        snr=args.snr,
        db=args.snr_db,
        seed=args.seed,
    )
    directory, stem = split_prefix(args.out_prefix)
    service = SynthService(MatrixRepo(directory, fmt=args.format))
    instance = service.generate(spec)
    for label, path in service.save(instance, stem).items():
        print(f"{label}\t{path}")
    return 0
