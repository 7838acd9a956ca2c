"""
commands/stack_decompose.py

`stack-decompose`: read a directory of PGM frames, separate a low-rank
background from a sparse foreground, and write `bg_<name>.pgm` and
`fg_<name>.pgm` per input frame. Works the same for video frames and face
image sets.

Functions:
    - register: Add the sub-command parser.
    - cmd_stack_decompose: Handle the sub-command.
"""

import argparse
from pathlib import Path

from commands._options import add_solver_flags, solver_config
from configs.settings import Settings
from repositories import FrameRepo, MatrixRepo
from services import StackService


def register(subparsers, settings: Settings) -> None:
    parser = subparsers.add_parser(
        "stack-decompose", help="background / foreground separation of a PGM frame directory"
    )
    parser.add_argument("--frames", required=True, help="directory of .pgm (P5) frames")
    parser.add_argument("--out", required=True, help="output directory")
    parser.add_argument(
        "--dump-sparse", action="store_true", help="also write the raw sparse part as S_raw.mat1"
    )
    parser.add_argument(
        "--decode-workers", type=int, default=4, help="threads decoding frames (default: 4)"
    )
    add_solver_flags(parser)
    parser.set_defaults(handler=cmd_stack_decompose)


def cmd_stack_decompose(args: argparse.Namespace, settings: Settings) -> int:
    config = solver_config(args)
    out = Path(args.out)
    service = StackService(
        frames=FrameRepo(args.frames, workers=args.decode_workers),
        output=FrameRepo(out),
        matrices=MatrixRepo(out, fmt="mat1") if args.dump_sparse else None,
    )
    decomposition = service.run(config)
    result = decomposition.result

    print(f"frames\t{len(decomposition.background)}")
    print(f"size\t{decomposition.background.height}x{decomposition.background.width}")
    print(f"rank\t{config.rank}")
    print(f"iterations\t{result.iterations}")
    print(f"termination\t{result.termination.value}")
    print(f"objective\t{result.final_objective!r}")
    print(f"foreground_energy\t{decomposition.foreground_energy!r}")
    print(f"output\t{service.output_dir}")
    return 0
