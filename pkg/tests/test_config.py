"""Tests for solver configuration."""

import pytest

from constants import DEFAULT_MAX_ITERATIONS, DEFAULT_ORACLE_BUDGET
from core.config import SolverConfig
from core.exceptions import ValidationException


class TestSolverConfig:
    """Tests for SolverConfig loading and overrides."""

    def test_defaults(self):
        config = SolverConfig()
        assert config.oracle_budget == DEFAULT_ORACLE_BUDGET
        assert config.max_iterations == DEFAULT_MAX_ITERATIONS
        assert config.verify_certificates is True

    def test_missing_file_gives_defaults(self, tmp_path):
        """Test that a missing config file is not an error."""
        assert SolverConfig.from_yaml(tmp_path / "absent.yaml") == SolverConfig()

    def test_none_path_gives_defaults(self):
        assert SolverConfig.from_yaml(None) == SolverConfig()

    def test_partial_file(self, tmp_path):
        """Test that missing keys keep their defaults."""
        path = tmp_path / "solver.yaml"
        path.write_text("oracle_budget: 100\nverify_certificates: false\n")
        config = SolverConfig.from_yaml(path)
        assert config.oracle_budget == 100
        assert config.verify_certificates is False
        assert config.max_iterations == DEFAULT_MAX_ITERATIONS

    def test_empty_file(self, tmp_path):
        path = tmp_path / "solver.yaml"
        path.write_text("")
        assert SolverConfig.from_yaml(path) == SolverConfig()

    def test_unknown_key(self, tmp_path):
        path = tmp_path / "solver.yaml"
        path.write_text("budget: 100\n")
        with pytest.raises(ValidationException) as exc_info:
            SolverConfig.from_yaml(path)
        assert "unknown settings: budget" in str(exc_info.value)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "solver.yaml"
        path.write_text("- 1\n- 2\n")
        with pytest.raises(ValidationException):
            SolverConfig.from_yaml(path)

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "solver.yaml"
        path.write_text("oracle_budget: [1\n")
        with pytest.raises(ValidationException):
            SolverConfig.from_yaml(path)

    def test_invalid_value(self, tmp_path):
        path = tmp_path / "solver.yaml"
        path.write_text("max_iterations: 0\n")
        with pytest.raises(ValidationException):
            SolverConfig.from_yaml(path)

    def test_overrides_skip_none(self):
        """Test that None overrides leave the setting alone."""
        config = SolverConfig(oracle_budget=10).with_overrides(oracle_budget=None, max_workers=1)
        assert config.oracle_budget == 10
        assert config.max_workers == 1

    def test_invalid_override(self):
        with pytest.raises(ValidationException):
            SolverConfig().with_overrides(max_workers=-1)

    def test_non_bool_certificates(self):
        with pytest.raises(ValidationException):
            SolverConfig(verify_certificates="yes").validate()

    def test_shipped_config_is_valid(self):
        """Test that config/solver.yaml loads with the built-in defaults."""
        from pathlib import Path

        path = Path(__file__).parent.parent / "config" / "solver.yaml"
        assert SolverConfig.from_yaml(path) == SolverConfig()
