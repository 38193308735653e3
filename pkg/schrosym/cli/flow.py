"""The flow command: Lie equations, group law and potential chains."""

import argparse
import functools
import time

from schrosym.expr import format_expr, parse
from schrosym.flows import (
    FlowName,
    build_flow,
    default_space,
    potential_chain,
    verify_group_law,
    verify_lie_equations,
)
from schrosym.runner import CheckTask, run_checks

from .common import common_parser, emit, handle_errors, load_config


@handle_errors
def subcommand_flow(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    config = load_config(args)
    name = FlowName.parse(config.flow or "")
    space = default_space(name, config.n or 2)
    flow = build_flow(name, space, dict(config.params))
    lines = [f"flow {flow.name} with parameter {flow.parameter}:"]
    lines.extend(
        f"  {symbol.name}' = {format_expr(value, space)}" for symbol, value in flow.forward
    )
    lines.extend(f"  {format_expr(d, space)} != 0" for d in flow.domain)
    lines.extend(f"  {note}" for note in flow.notes)

    tasks = [
        CheckTask(
            f"{flow.name}/lie-equations",
            "flow",
            functools.partial(verify_lie_equations, flow),
        ),
        CheckTask(
            f"{flow.name}/group-law", "flow", functools.partial(verify_group_law, flow)
        ),
    ]
    if args.potential:
        chain = potential_chain(flow, parse(args.potential, space))
        lines.extend(chain.lines(space))
        tasks.append(
            CheckTask(f"{flow.name}/chain", "flow", functools.partial(chain.as_report, space))
        )
    items = run_checks(tasks, config.jobs)
    return emit(config, items, start, lines)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "flow",
        parents=[common_parser()],
        help="verify a closed-form flow and the potentials it generates",
    )
    parser.add_argument(
        "--name",
        dest="flow",
        required=True,
        choices=[name.value for name in FlowName],
        help="flow to verify",
    )
    parser.add_argument(
        "--potential", type=str, help="potential W(t, x) to transport twice"
    )
    parser.set_defaults(func=subcommand_flow)
