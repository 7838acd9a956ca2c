"""
commands/_options.py

Flag groups and helpers shared by the sub-commands.

Functions:
    - add_solver_flags: Register the solver flags on a sub-command parser.
    - solver_config: Build a SolverConfig from parsed flags and the chosen preset.
    - add_format_flag: Register `--format csv|mat1`.
    - number_list: argparse type for comma-separated number lists.
    - split_prefix: Split an output prefix into directory and file stem.
"""

import argparse
from pathlib import Path
from typing import Callable, List, Tuple, TypeVar

from configs.settings import Settings
from models import InitScheme, SolverConfig, SparseVariant

N = TypeVar("N", int, float)

# flag -> (SolverConfig field, argparse type)
SOLVER_FLAGS = {
    "--rank": ("rank", int),
    "--lambda": ("lam", float),
    "--t": ("prox_t", float),
    "--p": ("p", float),
    "--max-iter": ("max_iter", int),
    "--tol": ("tol", float),
    "--seed": ("seed", int),
}


def _default(field: str):
    value = SolverConfig.model_fields[field].default
    return value.value if hasattr(value, "value") else value


def add_solver_flags(
    parser: argparse.ArgumentParser,
    rank: bool = True,
    variant: bool = True,
) -> None:
    """
    Register the solver flags. Every flag defaults to "unset" so that the
    chosen preset supplies the value; the help text shows the plain defaults.
    """
    group = parser.add_argument_group("solver")
    group.add_argument(
        "--preset",
        choices=("default", "tuned"),
        default="default",
        help="parameter preset; explicit flags override it (default: default)",
    )
    for flag, (field, kind) in SOLVER_FLAGS.items():
        if flag == "--rank" and not rank:
            continue
        group.add_argument(
            flag, dest=field, type=kind, default=None, help=f"(default: {_default(field)})"
        )
    if variant:
        group.add_argument(
            "--variant",
            choices=[v.value for v in SparseVariant],
            default=None,
            help=f"sparse penalty (default: {_default('variant')})",
        )
    group.add_argument(
        "--init",
        choices=[i.value for i in InitScheme],
        default=None,
        help=f"factor initialization (default: {_default('init')})",
    )


def solver_config(args: argparse.Namespace, **fixed) -> SolverConfig:
    """
    Resolve the solver parameters: preset first, then explicit flags, then
    the `fixed` keyword overrides.
    """
    overrides = {}
    for field in list(SOLVER_FLAGS.values()) + [("variant", None), ("init", None)]:
        name = field[0]
        value = getattr(args, name, None)
        if value is not None:
            overrides[name] = value
    overrides.update(fixed)
    if args.preset == "tuned":
        return SolverConfig.tuned(**overrides)
    return SolverConfig(**overrides)


def add_format_flag(parser: argparse.ArgumentParser, settings: Settings) -> None:
    parser.add_argument(
        "--format",
        choices=("csv", "mat1"),
        default=settings.matrix_format,
        help=f"matrix file format (default: {settings.matrix_format})",
    )


def number_list(kind: Callable[[str], N]) -> Callable[[str], List[N]]:
    def parse(text: str) -> List[N]:
        tokens = [token.strip() for token in text.split(",") if token.strip()]
        if not tokens:
            raise argparse.ArgumentTypeError("expected a non-empty comma-separated list")
        try:
            return [kind(token) for token in tokens]
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid list {text!r}") from None

    parse.__name__ = f"{kind.__name__} list"
    return parse


def split_prefix(prefix: str) -> Tuple[Path, str]:
    """Split "out/fig1" into (Path("out"), "fig1")."""
    path = Path(prefix)
    return path.parent, path.name
