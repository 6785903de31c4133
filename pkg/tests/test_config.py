"""Tests for configuration, logging and errors."""
import logging

import orjson
import pytest
from pydantic import ValidationError

from cyclolc.config import AnalysisConfig, CycloConfig, LoggingConfig
from cyclolc.errors import (
    CycloError,
    ConfigError,
    FieldTooLargeError,
    GridTooLargeError,
    InconsistencyError,
    NotAUnitError,
    ParameterError,
)
from cyclolc.utils.log import setup_logging


def test_defaults(config):
    """Test default settings."""
    assert config.logging.level == "WARNING"
    assert config.analysis.field_check is False
    assert config.analysis.max_field_degree == 64
    assert config.analysis.bm_periods == 2
    assert config.verify.max_analyses == 10_000


def test_yaml_round_trip(tmp_path):
    """Test to_yaml and from_yaml."""
    path = tmp_path / "config.yaml"
    config = CycloConfig()
    config.analysis.workers = 4
    config.to_yaml(path)
    loaded = CycloConfig.from_yaml(path)
    assert loaded.analysis.workers == 4
    assert loaded.model_dump() == config.model_dump()


def test_environment_override(monkeypatch):
    """Test CYCLOLC_ variables with the nested delimiter."""
    monkeypatch.setenv("CYCLOLC_ANALYSIS__WORKERS", "3")
    monkeypatch.setenv("CYCLOLC_LOGGING__LEVEL", "DEBUG")
    config = CycloConfig()
    assert config.analysis.workers == 3
    assert config.logging.level == "DEBUG"


def test_invalid_values():
    """Test field constraints."""
    with pytest.raises(ValidationError):
        AnalysisConfig(bm_periods=1)
    with pytest.raises(ValidationError):
        LoggingConfig(format="xml")


def test_json_logging(capsys):
    """Test that structured logs are JSON objects on stderr."""
    setup_logging(LoggingConfig(level="INFO", format="json"))
    logging.getLogger("cyclolc.tests").info("hello", extra={"context": {"p": 7}})
    captured = capsys.readouterr()
    assert captured.out == ""
    record = orjson.loads(captured.err.strip().splitlines()[-1])
    assert record["message"] == "hello"
    assert record["level"] == "INFO"
    assert record["p"] == 7


def test_error_exit_codes():
    """Test the exit code attached to each error type."""
    assert CycloError("x").exit_code == 1
    assert ParameterError("x").exit_code == 2
    assert GridTooLargeError("x").exit_code == 2
    assert NotAUnitError(2, 8).exit_code == 2
    assert InconsistencyError("x").exit_code == 3
    assert ConfigError("x").exit_code == 2
    assert FieldTooLargeError(155, 64).n == 155
    assert isinstance(ParameterError("x"), ValueError)


def test_malformed_yaml_is_a_config_error(tmp_path):
    """Test that invalid values and broken YAML become one-line ConfigErrors."""
    bad_value = tmp_path / "bad-value.yaml"
    bad_value.write_text("analysis:\n  bm_periods: 1\n")
    with pytest.raises(ConfigError, match="analysis.bm_periods"):
        CycloConfig.from_yaml(bad_value)

    broken = tmp_path / "broken.yaml"
    broken.write_text("analysis: [unclosed\n")
    with pytest.raises(ConfigError, match="not valid YAML"):
        CycloConfig.from_yaml(broken)

    scalar = tmp_path / "scalar.yaml"
    scalar.write_text("42\n")
    with pytest.raises(ConfigError, match="mapping"):
        CycloConfig.from_yaml(scalar)


def test_load_without_file_reads_environment(monkeypatch):
    """Test load() with and without an invalid environment value."""
    monkeypatch.setenv("CYCLOLC_VERIFY__MAX_ANALYSES", "7")
    assert CycloConfig.load().verify.max_analyses == 7
    monkeypatch.setenv("CYCLOLC_VERIFY__MAX_ANALYSES", "0")
    with pytest.raises(ConfigError, match="environment"):
        CycloConfig.load()
