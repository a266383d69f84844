"""
Formatting utilities for outerproj output.

Provides display helpers for rational vectors, durations and the plain-text
comparison table printed by ``verify``.
"""

import os
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from utils.validation import format_rational

ANSI_GREEN = "\033[32m"
ANSI_RED = "\033[31m"
ANSI_RESET = "\033[0m"


def format_number(num: int) -> str:
    """
    Format number with thousands separators.

    Examples:
        >>> format_number(1234567)
        '1,234,567'
    """
    return f"{num:,}"


def format_vector(values: Sequence[Fraction]) -> str:
    """
    Format a rational vector as a tuple of canonical rationals.

    Examples:
        >>> format_vector((Fraction(1, 2), Fraction(-1)))
        '(1/2, -1)'
    """
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def format_vector_set(vectors: Iterable[Sequence[Fraction]]) -> str:
    """Format a set of vectors in sorted order, braces included."""
    return "{" + ", ".join(format_vector(v) for v in sorted(tuple(v) for v in vectors)) + "}"


def format_duration(seconds: float) -> str:
    """
    Format elapsed seconds for humans.

    Examples:
        >>> format_duration(0.0123)
        '12.3 ms'
        >>> format_duration(2.5)
        '2.50 s'
    """
    if seconds < 1:
        return f"{seconds * 1000:.1f} ms"
    return f"{seconds:.2f} s"


def color_enabled(stream_isatty: bool = True) -> bool:
    """Colour is used on terminals unless NO_COLOR is set (to anything)."""
    return stream_isatty and "NO_COLOR" not in os.environ


def colorize(text: str, ok: bool, enabled: Optional[bool] = None) -> str:
    """Wrap ``text`` in green (ok) or red, if colour is enabled."""
    if enabled is None:
        enabled = color_enabled()
    if not enabled:
        return text
    return f"{ANSI_GREEN if ok else ANSI_RED}{text}{ANSI_RESET}"


def render_table(headers: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    """
    Render a left-aligned plain-text table.

    Column widths ignore ANSI escape sequences so coloured cells line up.

    Examples:
        >>> print(render_table(["a", "bb"], [["1", "2"]]))
        a  bb
        -  --
        1  2
    """
    def visible_len(cell: str) -> int:
        for code in (ANSI_GREEN, ANSI_RED, ANSI_RESET):
            cell = cell.replace(code, "")
        return len(cell)

    widths = [visible_len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], visible_len(cell))

    def line(cells: Sequence[str]) -> str:
        padded = [cell + " " * (width - visible_len(cell)) for cell, width in zip(cells, widths)]
        return "  ".join(padded).rstrip()

    out = [line(headers), line(["-" * w for w in widths])]
    out.extend(line(row) for row in rows)
    return "\n".join(out)


__all__ = [
    "format_number",
    "format_vector",
    "format_vector_set",
    "format_duration",
    "color_enabled",
    "colorize",
    "render_table",
]
