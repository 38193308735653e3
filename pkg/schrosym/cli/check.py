"""The check command: invariance of generators on an equation system."""

import argparse
import functools
import time

from schrosym.catalog import (
    build_equation,
    build_family,
    build_probes,
    key_space,
    schrodinger_space,
)
from schrosym.config import RunConfig
from schrosym.exceptions import ConfigError
from schrosym.expr import JetSpace, parse
from schrosym.invariance import EquationSystem, pass_bound
from schrosym.jetfield import VectorField, parse_field
from schrosym.runner import CheckTask, run_checks
from schrosym.suites import check_fields

from .common import catalog_key, common_parser, emit, handle_errors, load_config

UNCURATED_NOTE = "uncurated: the solved forms of a typed-in system may be incomplete"


def user_system(config: RunConfig, space: JetSpace, args: argparse.Namespace) -> EquationSystem:
    """Build a system from `--residual` and `--solve-for` pairs."""
    residuals = args.residual or []
    leading = args.solve_for or []
    if len(residuals) != len(leading):
        raise ConfigError("Every --residual needs one --solve-for")
    return EquationSystem.build(
        "user",
        space,
        [parse(text, space) for text in residuals],
        [parse(text, space) for text in leading],
        conjugate=not args.no_conjugate,
        curated=False,
        notes=(UNCURATED_NOTE,),
        pass_factor=config.reduction_passes,
    )


def _field_task(
    section: str, field: VectorField, system: EquationSystem, passes: int, expect_fail: bool = False
) -> CheckTask:
    suffix = "/probe" if expect_fail else ""
    return CheckTask(
        id=f"{section}/{field.name}{suffix}",
        section=section,
        run=functools.partial(check_fields, [field], system, max_passes=passes),
        expect_fail=expect_fail,
    )


@handle_errors
def subcommand_check(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    config = load_config(args)
    key = catalog_key(config) if config.equation else None
    if args.residual:
        space = key_space(key) if key else schrodinger_space(config.n or 1, label="user")
        system = user_system(config, space, args)
    elif key is not None:
        space = key_space(key)
        system = build_equation(key)
    else:
        raise ConfigError("Give --equation or --residual")

    fields: list[VectorField] = []
    probes: list[VectorField] = []
    if args.field:
        fields = [
            parse_field(text, space, f"X{index}")
            for index, text in enumerate(args.field, start=1)
        ]
    elif key is not None:
        family_key = catalog_key(config, config.family) if config.family else key
        if key_space(family_key) != space:
            raise ConfigError(f"{family_key.label} does not act on the space of {system.name}")
        fields = build_family(family_key)
        probes = build_probes(family_key)
    if not fields:
        raise ConfigError("No generators to check, give --field or --equation")

    section = system.name if system.curated else "user"
    passes = pass_bound(system, config.reduction_passes)
    tasks = [_field_task(section, field, system, passes) for field in fields]
    tasks.extend(_field_task(section, probe, system, passes, True) for probe in probes)
    items = run_checks(tasks, config.jobs)
    lines = [f"system {system.name}: {len(system.residuals)} residuals", *system.notes]
    return emit(config, items, start, lines)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "check",
        parents=[common_parser()],
        help="check invariance of generators on an equation",
    )
    parser.add_argument("--equation", type=str, help="catalog family of the system")
    parser.add_argument(
        "--family", type=str, help="catalog family of the generators, the equation by default"
    )
    parser.add_argument("--case", type=int, help="case of euler-system")
    parser.add_argument(
        "--field", action="append", metavar="DSL", help="user field, repeatable"
    )
    parser.add_argument(
        "--residual", action="append", metavar="EXPR", help="user residual, repeatable"
    )
    parser.add_argument(
        "--solve-for",
        dest="solve_for",
        action="append",
        metavar="JET",
        help="leading jet of the matching --residual",
    )
    parser.add_argument(
        "--no-conjugate",
        action="store_true",
        default=False,
        help="do not adjoin conjugate residuals",
    )
    parser.set_defaults(func=subcommand_check)
