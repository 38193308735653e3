"""Flags, configuration and output shared by the subcommands."""

import argparse
import functools
import json
import logging
import sys
import time
from collections.abc import Callable, Iterable
from pathlib import Path

from schrosym import __version__
from schrosym.catalog import CatalogKey
from schrosym.config import RunConfig
from schrosym.exceptions import ConfigError, SchrosymException
from schrosym.models import ReportItem, RunReport, Status

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

Handler = Callable[[argparse.Namespace], int]


def common_parser() -> argparse.ArgumentParser:
    """Parent parser with the flags every subcommand accepts."""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--n", type=int, help="spatial dimension")
    parser.add_argument(
        "--param",
        action="append",
        metavar="K=V",
        help="parameter binding, repeatable",
    )
    parser.add_argument("--tol", type=float, help="numeric tolerance")
    parser.add_argument("--format", choices=["text", "json"], help="report format")
    parser.add_argument("--out", type=str, help="write the report to this file")
    parser.add_argument("--jobs", type=int, help="checks run concurrently")
    parser.add_argument("--config", type=str, help="YAML run configuration")
    parser.add_argument(
        "-v", "--verbose", action="store_true", default=False, help="log progress"
    )
    return parser


def load_config(args: argparse.Namespace) -> RunConfig:
    return RunConfig.load(args.config).merge_args(args).validate()


def catalog_key(config: RunConfig, family: str | None = None) -> CatalogKey:
    """The catalog key named by the configuration."""
    name = family or config.equation
    if name is None:
        raise ConfigError("An --equation is required")
    return CatalogKey.create(
        name, n=config.n, params=dict(config.params), case=config.case
    )


def handle_errors(func: Handler) -> Handler:
    """Map library exceptions to exit code 2."""

    @functools.wraps(func)
    def wrapper(args: argparse.Namespace) -> int:
        try:
            return func(args)
        except SchrosymException as err:
            logger.debug("Command failed", exc_info=True)
            print(f"Error: {err}", file=sys.stderr)
            return EXIT_USAGE

    return wrapper


def _text(report: RunReport, lines: Iterable[str]) -> str:
    body = list(lines)
    body.extend(
        f"{item.status.value.upper():<5} {item.id}: {item.detail}" for item in report.items
    )
    passed = sum(1 for item in report.items if item.status is Status.PASS)
    body.append(
        f"{report.status.value.upper()}: {passed}/{len(report.items)} passed "
        f"in {report.timing_ms / 1000:.1f} s"
    )
    return "\n".join(body) + "\n"


def to_json(report: RunReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + "\n"


def emit(
    config: RunConfig,
    items: Iterable[ReportItem],
    start: float,
    lines: Iterable[str] = (),
) -> int:
    """Write the report and return the exit code of its status."""
    report = RunReport.from_items(
        __version__,
        config.command,
        items,
        timing_ms=(time.perf_counter() - start) * 1000,
    )
    text = to_json(report) if config.format == "json" else _text(report, lines)
    if config.output:
        Path(config.output).write_text(text)
        logger.info(f"Wrote report to {config.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.status is Status.PASS else EXIT_FAILED
