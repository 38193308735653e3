"""The reproduce command: the whole verification matrix by section."""

import argparse
import logging
import time
from collections import Counter
from pathlib import Path

from schrosym import __version__
from schrosym.models import RunReport, Status
from schrosym.runner import run_checks
from schrosym.suites import SECTIONS, reproduce_tasks

from .common import common_parser, emit, handle_errors, load_config, to_json

logger = logging.getLogger(__name__)


@handle_errors
def subcommand_reproduce(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    config = load_config(args)
    tasks = reproduce_tasks(config.only)
    logger.info(f"Running {len(tasks)} checks with {config.jobs} jobs")
    items = run_checks(tasks, config.jobs)

    passed = Counter(item.section for item in items if item.status is Status.PASS)
    total = Counter(item.section for item in items)
    lines = [
        f"{section}: {passed[section]}/{total[section]}"
        for section in SECTIONS
        if total[section]
    ]
    if args.json:
        report = RunReport.from_items(
            __version__,
            config.command,
            items,
            timing_ms=(time.perf_counter() - start) * 1000,
        )
        Path(args.json).write_text(to_json(report))
        logger.info(f"Wrote summary to {args.json}")
    return emit(config, items, start, lines)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    parser = subparsers.add_parser(
        "reproduce",
        parents=[common_parser()],
        help="run every check, grouped by section",
    )
    parser.add_argument(
        "--only", type=str, help=f"section id prefix, one of: {', '.join(SECTIONS)}"
    )
    parser.add_argument("--json", type=str, help="also write the JSON summary here")
    parser.set_defaults(func=subcommand_reproduce)
