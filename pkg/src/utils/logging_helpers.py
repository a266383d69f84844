"""
Framed log output for the outerproj CLI.

Command failures and per-instance headers are printed between rule lines so
they stand out in long verify runs.
"""

import logging
from typing import Iterable, Optional

RULE_WIDTH = 60


def _framed(level: int, lines: Iterable[str], logger: Optional[logging.Logger], rule: str) -> None:
    logger = logger or logging.getLogger()
    logger.log(level, rule * RULE_WIDTH)
    for line in lines:
        logger.log(level, line or "")
    logger.log(level, rule * RULE_WIDTH)


def log_error_section(title: str, messages: Iterable[str], logger: Optional[logging.Logger] = None) -> None:
    """
    Log a failure title followed by its detail lines.

    Examples:
        >>> log_error_section("solve failed (UnboundedInstance)", ["x3 is unbounded over X"])
        ============================================================
        solve failed (UnboundedInstance)
        x3 is unbounded over X
        ============================================================
    """
    _framed(logging.ERROR, [title, *messages], logger, "=")


def log_warning_section(title: str, messages: Iterable[str], logger: Optional[logging.Logger] = None) -> None:
    """Same framing as log_error_section at WARNING level."""
    _framed(logging.WARNING, [title, *messages], logger, "-")


def log_info_header(message: str, logger: Optional[logging.Logger] = None) -> None:
    _framed(logging.INFO, [message], logger, "=")
