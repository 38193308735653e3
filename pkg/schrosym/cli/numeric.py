"""The numeric command: residuals of transported solutions on a grid."""

import argparse
import functools
import time
from pathlib import Path

from schrosym.exceptions import ConfigError
from schrosym.flows import FlowName
from schrosym.numeric import (
    NUMERIC_FLOWS,
    SAMPLE_SETS,
    SOLUTIONS,
    Grid1D,
    NumericRun,
    run_numeric,
)
from schrosym.runner import CheckTask, to_item

from .common import common_parser, emit, handle_errors, load_config


@handle_errors
def subcommand_numeric(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    config = load_config(args)
    if config.n not in (None, 1):
        raise ConfigError(f"Numeric runs are one-dimensional, got n={config.n}")
    run = NumericRun(
        flow=config.flow or FlowName.IDENTITY.value,
        solution=config.solution,
        grid=Grid1D.parse(config.grid, mode=config.mode),
        refinements=config.refinements,
        tolerance=config.tolerance,
        csv=Path(args.csv) if args.csv else None,
        samples=args.samples or "polynomial",
    )
    record = run_numeric(run)
    task = CheckTask(
        f"{record.flow}/{record.solution}", "numeric", functools.partial(run_numeric, run)
    )
    lines = [
        f"flow {record.flow}, solution {record.solution}, "
        f"grid {record.grid} ({record.mode})"
    ]
    if record.ratios:
        lines.append(f"  ratios: {', '.join(f'{r:.3f}' for r in record.ratios)}")
    return emit(config, [to_item(task, record)], start, lines)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "numeric",
        parents=[common_parser()],
        help="evaluate residuals of transported solutions on a grid",
    )
    parser.add_argument(
        "--flow",
        choices=[flow.value for flow in NUMERIC_FLOWS],
        help="flow applied to the solution",
    )
    parser.add_argument("--solution", choices=list(SOLUTIONS), help="named solution")
    parser.add_argument("--mode", choices=["analytic", "fd"], help="derivative mode")
    parser.add_argument("--grid", type=str, help="grid as NTxNX, 201x201 by default")
    parser.add_argument("--refinements", type=int, help="grids of a convergence run")
    parser.add_argument("--csv", type=str, help="write per-point residuals to this file")
    parser.add_argument(
        "--samples",
        choices=list(SAMPLE_SETS),
        help="closed forms of the arbitrary functions, polynomial by default",
    )
    parser.set_defaults(func=subcommand_numeric)
