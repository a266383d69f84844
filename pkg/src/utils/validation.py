"""
Input validation utilities for outerproj.

Provides validation functions for rational literals and numeric
settings so that malformed input is rejected before any solving starts.
"""

import re
from fractions import Fraction

from core.exceptions import ValidationException

RATIONAL_PATTERN = re.compile(r"^-?\d+(/\d+)?$")
"""Decimal-free rational literal: "a" or "a/b"."""


def parse_rational(value, field_name: str = "value") -> Fraction:
    """
    Parse an exact rational from a file value.

    Accepts integers and strings of the form "a" or "a/b" with b > 0.
    Floats and decimal strings are rejected, since they are not exact.

    Args:
        value: Raw value from a YAML document
        field_name: Field name for error messages

    Returns:
        The rational as a Fraction

    Raises:
        ValidationException: If the value is not an exact rational literal

    Examples:
        >>> parse_rational("3/4")
        Fraction(3, 4)
        >>> parse_rational(-2)
        Fraction(-2, 1)
        >>> parse_rational("1.5")
        ValidationException: ...
    """
    if isinstance(value, bool):
        raise ValidationException(f"expected a rational, got boolean {value}", field_name)
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValidationException(
            f"expected an integer or 'a/b' string, got {type(value).__name__} {value!r}",
            field_name,
        )

    text = value.strip()
    if not RATIONAL_PATTERN.match(text):
        raise ValidationException(f"not an exact rational literal: {value!r}", field_name)
    if "/" in text and int(text.split("/")[1]) == 0:
        raise ValidationException(f"zero denominator in {value!r}", field_name)
    return Fraction(text)


def format_rational(value: Fraction) -> str:
    """
    Canonical text for a rational: "a" for integers, "a/b" otherwise.

    Examples:
        >>> format_rational(Fraction(6, 4))
        '3/2'
        >>> format_rational(Fraction(-2))
        '-2'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def validate_positive_int(value, field_name: str, min_value: int = 1) -> int:
    """
    Validate that a setting is an integer of at least ``min_value``.

    Raises:
        ValidationException: If the value is not an int or is too small
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationException(f"expected an integer, got {value!r}", field_name)
    if value < min_value:
        raise ValidationException(f"Value must be >= {min_value}, got {value}", field_name)
    return value


__all__ = [
    "RATIONAL_PATTERN",
    "parse_rational",
    "format_rational",
    "validate_positive_int",
]
