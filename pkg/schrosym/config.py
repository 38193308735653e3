"""Run configuration of the command line tool."""

import argparse
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from mashumaro.config import TO_DICT_ADD_OMIT_NONE_FLAG, BaseConfig
from mashumaro.mixins.yaml import DataClassYAMLMixin

from .exceptions import ConfigError

__all__ = ["RunConfig", "parse_params"]

logger = logging.getLogger(__name__)

FORMATS = ("text", "json")


def parse_params(values: list[str] | None) -> dict[str, str]:
    """Parse repeated `K=V` flags."""
    params: dict[str, str] = {}
    for value in values or ():
        name, sep, text = value.partition("=")
        if not sep or not name.strip() or not text.strip():
            raise ConfigError(f"Parameters must look like K=V, got {value!r}")
        params[name.strip()] = text.strip()
    return params


@dataclass
class RunConfig(DataClassYAMLMixin):
    command: str = ""
    """Subcommand being run."""

    equation: str | None = None
    """Catalog family of the equation system, e.g. `theorem1`."""

    family: str | None = None
    """Catalog family of the operators, the equation family when unset."""

    flow: str | None = None
    """Flow name for the `flow` and `numeric` commands."""

    solution: str = "planewave"
    """Named solution for the `numeric` command."""

    n: int | None = None
    """Spatial dimension, the command's default when unset."""

    case: int | None = None
    """Case of the Euler-type system."""

    params: dict[str, str] = field(default_factory=dict)
    """Parameter bindings, as DSL text."""

    tolerance: float = 1e-10
    """Numeric tolerance.

    Env Var: `SCHROSYM_TOLERANCE`
    """

    output: str | None = None
    """File the report is written to, stdout when unset."""

    format: str = "text"
    """Report format, `text` or `json`.

    Env Var: `SCHROSYM_FORMAT`
    """

    jobs: int = 1
    """Number of checks run concurrently.

    Env Var: `SCHROSYM_JOBS`
    """

    reduction_passes: int = 10
    """Multiplier of the reduction fixpoint bound."""

    grid: str = "201x201"
    """Grid of the numeric command as `NTxNX`."""

    mode: str = "analytic"
    """Derivative mode of the numeric command, `analytic` or `fd`."""

    refinements: int = 3
    """Number of grids of a convergence run."""

    only: str | None = None
    """Section id prefix that restricts `reproduce`."""

    @classmethod
    def load(cls, config_file: str | Path | None = None) -> "RunConfig":
        """Load the configuration file if given, then environment overrides."""
        config = cls()
        if config_file is not None:
            config_file = Path(config_file)
            if config_file.exists():
                logger.info(f"Using config file: {config_file}")
                try:
                    config = cls.from_yaml(config_file.read_text())
                except Exception as e:
                    raise ConfigError(f"Failed to load config file {config_file}: {e}")
            else:
                logger.warning(f"Config file {config_file} does not exist")

        if tolerance := os.getenv("SCHROSYM_TOLERANCE"):
            try:
                config.tolerance = float(tolerance)
                logger.info(f"Using SCHROSYM_TOLERANCE: {config.tolerance}")
            except ValueError:
                logger.warning(f"Ignoring SCHROSYM_TOLERANCE: {tolerance}")

        if jobs := os.getenv("SCHROSYM_JOBS"):
            try:
                config.jobs = int(jobs)
                logger.info(f"Using SCHROSYM_JOBS: {config.jobs}")
            except ValueError:
                logger.warning(f"Ignoring SCHROSYM_JOBS: {jobs}")

        if output_format := os.getenv("SCHROSYM_FORMAT"):
            config.format = output_format
            logger.info(f"Using SCHROSYM_FORMAT: {config.format}")

        return config

    def merge_args(self, args: argparse.Namespace) -> "RunConfig":
        """Apply command line flags that were given."""
        self.command = getattr(args, "command", None) or self.command
        overrides = {
            "equation": "equation",
            "family": "family",
            "flow": "flow",
            "solution": "solution",
            "n": "n",
            "case": "case",
            "tolerance": "tol",
            "output": "out",
            "format": "format",
            "jobs": "jobs",
            "grid": "grid",
            "mode": "mode",
            "refinements": "refinements",
            "only": "only",
        }
        for name, flag in overrides.items():
            value = getattr(args, flag, None)
            if value is not None:
                setattr(self, name, value)
        self.params.update(parse_params(getattr(args, "param", None)))
        return self

    def validate(self) -> "RunConfig":
        if not self.tolerance > 0:
            raise ConfigError(f"Tolerance must be positive, got {self.tolerance}")
        if self.jobs < 1:
            raise ConfigError(f"Jobs must be at least 1, got {self.jobs}")
        if self.format not in FORMATS:
            raise ConfigError(f"Format must be text or json, got {self.format!r}")
        if self.reduction_passes < 1:
            raise ConfigError(f"Reduction passes must be at least 1, got {self.reduction_passes}")
        if self.refinements < 2:
            raise ConfigError(f"Refinements must be at least 2, got {self.refinements}")
        return self

    class Config(BaseConfig):
        omit_none = True
        code_generation_options = [TO_DICT_ADD_OMIT_NONE_FLAG]  # type: ignore[list-item]
