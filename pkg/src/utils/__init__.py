"""Utility modules for exact arithmetic, validation and formatting."""

from utils.exact import rank, solve_square
from utils.validation import format_rational, parse_rational

__all__ = [
    "rank",
    "solve_square",
    "format_rational",
    "parse_rational",
]
