"""Main CLI entry point."""

import argparse
import importlib
import logging
import sys

SUBPARSERS = ["check", "determining", "flow", "numeric", "reproduce"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schrosym",
        description="Symbolic and numeric verification of Schrodinger equation symmetries",
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to run")
    for name in SUBPARSERS:
        mod = importlib.import_module(f".{name}", package="schrosym.cli")
        mod.add_parser(subparsers)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 2

    logging.basicConfig(
        level=logging.INFO if getattr(args, "verbose", False) else logging.WARNING,
        format="%(message)s",
    )
    return int(args.func(args))


if __name__ == "__main__":
    sys.exit(main())
