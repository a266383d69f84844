"""
Centralized configuration constants for outerproj.

This module provides a single source of truth for default values that are
used across multiple modules, making them easier to update and maintain.
"""

# ============================================================================
# Solver Defaults
# ============================================================================

DEFAULT_ANCHOR_OFFSET = 1
"""Distance below the componentwise objective minima at which the anchor point sits."""

DEFAULT_MAX_ITERATIONS = 10_000
"""Upper bound on outer approximation cuts before a run is abandoned."""

DEFAULT_VERIFY_CERTIFICATES = True
"""Whether every optimal LP solve is checked against its primal/dual certificate."""

# ============================================================================
# Oracle Budgets
# ============================================================================

DEFAULT_ORACLE_BUDGET = 5_000
"""Maximum number of column subsets (or objective subsets) the oracle will enumerate."""

# ============================================================================
# Concurrency
# ============================================================================

DEFAULT_MAX_WORKERS = 3
"""Default number of worker threads (verify runs the three algorithms side by side)."""

# ============================================================================
# File Formats
# ============================================================================

RESULT_FORMAT_VERSION = "1.0"
"""Version tag written into result files."""

DEFAULT_CONFIG_PATH = "config/solver.yaml"
"""Default location of the YAML solver configuration."""

ALGORITHMS = ("projective", "euclidean", "oracle")
"""Algorithms selectable from the command line."""

GENERATOR_KINDS = ("dual-cyclic",)
"""Instance families the generate command can produce."""

# ============================================================================
# Exit Codes
# ============================================================================

EXIT_OK = 0
"""Success."""

EXIT_MISMATCH = 1
"""verify found algorithms that disagree."""

EXIT_INPUT_ERROR = 2
"""Malformed input file or invalid arguments."""

EXIT_INVALID_INSTANCE = 3
"""The feasible set X is empty or unbounded."""

EXIT_BUDGET = 4
"""An enumeration budget was exceeded."""
