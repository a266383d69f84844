"""
Solver configuration.

Provides a strongly-typed configuration object assembled from
``config/solver.yaml`` (or another YAML file) with command-line overrides,
falling back to the values in ``constants``.
"""

import logging
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional

import yaml

from constants import (
    DEFAULT_ANCHOR_OFFSET,
    DEFAULT_MAX_ITERATIONS,
    DEFAULT_MAX_WORKERS,
    DEFAULT_ORACLE_BUDGET,
    DEFAULT_VERIFY_CERTIFICATES,
)
from core.exceptions import ValidationException

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverConfig:
    """
    Settings shared by the solvers, the oracle and the CLI.

    Attributes:
        oracle_budget: Max column subsets / objective subsets the oracle enumerates
        max_iterations: Max cuts per outer approximation run
        max_workers: Threads used when verify runs algorithms side by side
        verify_certificates: Certify every optimal LP result
        anchor_offset: Distance of the anchor point below the objective minima
    """

    oracle_budget: int = DEFAULT_ORACLE_BUDGET
    max_iterations: int = DEFAULT_MAX_ITERATIONS
    max_workers: int = DEFAULT_MAX_WORKERS
    verify_certificates: bool = DEFAULT_VERIFY_CERTIFICATES
    anchor_offset: int = DEFAULT_ANCHOR_OFFSET

    def validate(self) -> "SolverConfig":
        """
        Validate configuration values.

        Raises:
            ValidationException: If a value is out of range
        """
        from utils.validation import validate_positive_int

        validate_positive_int(self.oracle_budget, "oracle_budget")
        validate_positive_int(self.max_iterations, "max_iterations")
        validate_positive_int(self.max_workers, "max_workers")
        validate_positive_int(self.anchor_offset, "anchor_offset")
        if not isinstance(self.verify_certificates, bool):
            raise ValidationException("must be true or false", "verify_certificates")
        return self

    def with_overrides(self, **overrides) -> "SolverConfig":
        """Copy with every non-None override applied, validated."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **changes).validate()

    @classmethod
    def from_yaml(cls, path: Optional[Path]) -> "SolverConfig":
        """
        Load settings from a YAML mapping; missing keys keep their defaults.

        A missing file yields the defaults (logged at debug level).

        Raises:
            ValidationException: If the file is not a mapping, has unknown
                keys or invalid values
        """
        if path is None or not Path(path).exists():
            logger.debug(f"No solver config at {path}; using defaults")
            return cls().validate()

        try:
            with open(path, "r") as f:
                content = yaml.safe_load(f) or {}
        except yaml.YAMLError as e:
            raise ValidationException(f"invalid YAML: {e}", str(path))

        if not isinstance(content, dict):
            raise ValidationException("expected a mapping of settings", str(path))

        known = {f.name for f in fields(cls)}
        unknown = sorted(set(content) - known)
        if unknown:
            raise ValidationException(f"unknown settings: {', '.join(unknown)}", str(path))

        logger.debug(f"Loaded solver config from {path}")
        return cls(**content).validate()


__all__ = ["SolverConfig"]
