"""Tests for the run configuration."""

import argparse
import os
from pathlib import Path
from unittest.mock import patch

import pytest
import yaml

from schrosym.config import RunConfig, parse_params
from schrosym.exceptions import ConfigError


def test_defaults() -> None:
    with patch.dict(os.environ, {}, clear=True):
        config = RunConfig.load()
    assert config.tolerance == 1e-10
    assert config.format == "text"
    assert config.jobs == 1
    assert config.grid == "201x201"


def test_load_from_file(tmp_path: Path) -> None:
    config_file = tmp_path / "schrosym.yaml"
    with open(config_file, "w") as f:
        yaml.safe_dump({"tolerance": 1e-8, "jobs": 4, "params": {"k": "2"}}, f)
    with patch.dict(os.environ, {}, clear=True):
        config = RunConfig.load(config_file)
    assert config.tolerance == 1e-8
    assert config.jobs == 4
    assert config.params == {"k": "2"}


def test_missing_file(tmp_path: Path) -> None:
    """A missing file falls back to the defaults."""
    with patch.dict(os.environ, {}, clear=True):
        config = RunConfig.load(tmp_path / "missing.yaml")
    assert config == RunConfig()


def test_invalid_file(tmp_path: Path) -> None:
    config_file = tmp_path / "schrosym.yaml"
    config_file.write_text("jobs: [1, 2\n")
    with pytest.raises(ConfigError):
        RunConfig.load(config_file)


def test_env_var_override(tmp_path: Path) -> None:
    config_file = tmp_path / "schrosym.yaml"
    config_file.write_text("jobs: 2\n")
    with patch.dict(
        os.environ,
        {"SCHROSYM_JOBS": "8", "SCHROSYM_TOLERANCE": "1e-6", "SCHROSYM_FORMAT": "json"},
    ):
        config = RunConfig.load(config_file)
    assert config.jobs == 8
    assert config.tolerance == 1e-6
    assert config.format == "json"


def test_invalid_env_var_ignored() -> None:
    with patch.dict(os.environ, {"SCHROSYM_JOBS": "many"}, clear=True):
        config = RunConfig.load()
    assert config.jobs == 1


def test_merge_args() -> None:
    args = argparse.Namespace(
        command="check", n=2, tol=1e-6, out="report.json", param=["k=2", "nu = 1/2"]
    )
    config = RunConfig(params={"k": "1", "m": "3"}).merge_args(args)
    assert config.command == "check"
    assert config.n == 2
    assert config.tolerance == 1e-6
    assert config.output == "report.json"
    assert config.params == {"k": "2", "m": "3", "nu": "1/2"}
    assert config.format == "text"


def test_parse_params() -> None:
    assert parse_params(None) == {}
    assert parse_params(["a=1"]) == {"a": "1"}
    for value in ("a", "=1", "a="):
        with pytest.raises(ConfigError):
            parse_params([value])


@pytest.mark.parametrize(
    "changes",
    [
        {"tolerance": 0.0},
        {"jobs": 0},
        {"format": "yaml"},
        {"reduction_passes": 0},
        {"refinements": 1},
    ],
)
def test_validate(changes: dict[str, object]) -> None:
    config = RunConfig(**changes)  # type: ignore[arg-type]
    with pytest.raises(ConfigError):
        config.validate()


def test_validate_defaults() -> None:
    assert RunConfig().validate() == RunConfig()
