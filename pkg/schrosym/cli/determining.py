"""The determining command: extracted and printed determining equations."""

import argparse
import functools
import time

from schrosym.catalog import (
    Family,
    Reading,
    build_equation,
    printed_determining_system,
)
from schrosym.catalog.keys import SUBALGEBRAS
from schrosym.exceptions import ConfigError
from schrosym.invariance import (
    ProofSolution,
    compare_systems,
    determining_ansatz,
    extract_determining,
    pass_bound,
    verify_proof_solution,
)
from schrosym.runner import CheckTask, to_item

from .common import catalog_key, common_parser, emit, handle_errors, load_config

ANSATZ_FAMILIES = frozenset(
    {Family.THEOREM1, Family.LAPLACE, Family.HEAT, Family.WAVE, Family.HJ, *SUBALGEBRAS}
)


@handle_errors
def subcommand_determining(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    config = load_config(args)
    config.equation = config.equation or Family.THEOREM1.value
    key = catalog_key(config)
    if key.family not in ANSATZ_FAMILIES:
        raise ConfigError(f"{key.family.value} does not take the point ansatz")
    system = build_equation(key)
    determining = extract_determining(
        determining_ansatz(system.space),
        system,
        max_passes=pass_bound(system, config.reduction_passes),
    )
    lines = [f"{determining.name}: {len(determining)} equations"]
    lines.extend(f"  {text}" for text in determining.formatted())

    items = []
    if key.family is Family.THEOREM1 or key.family in SUBALGEBRAS:
        for reading in Reading:
            printed = printed_determining_system(system.space, reading)
            comparison = compare_systems(determining, printed, reading=reading.value)
            lines.append(f"{printed.name}: {len(printed)} equations")
            lines.extend(f"  {text}" for text in comparison.printed)
            lines.append(
                f"  printed in extracted: {comparison.printed_in_extracted}, "
                f"extracted in printed: {comparison.extracted_in_printed}"
            )
            # Only the literal reading gates the exit code.
            task = CheckTask(
                f"printed-{reading.value}",
                "determining",
                comparison.as_report,
                informational=reading is not Reading.LITERAL,
            )
            items.append(to_item(task, task.run()))
        task = CheckTask(
            "proof-solution",
            "determining",
            functools.partial(verify_proof_solution, system, determining, ProofSolution(system.n)),
        )
        items.append(to_item(task, task.run()))
    else:
        lines.append("no printed system or proof solution is listed for this system")
    return emit(config, items, start, lines)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "determining",
        parents=[common_parser()],
        help="extract determining equations and verify the general solution",
    )
    parser.add_argument(
        "--equation", type=str, help="catalog family of the system, theorem1 by default"
    )
    parser.set_defaults(func=subcommand_determining)
