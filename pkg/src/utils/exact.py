"""
Exact linear algebra helpers.

Thin wrappers around sympy's rational matrices for the brute-force paths
(oracles, generators). The hot loops in the simplex and the double
description engine work on ``fractions.Fraction`` directly; these helpers
convert at the boundary.
"""

from fractions import Fraction
from typing import Optional, Sequence

import sympy


def to_sympy(rows: Sequence[Sequence]) -> sympy.Matrix:
    """Build an exact sympy matrix from rows of ints or Fractions."""
    return sympy.Matrix([[_to_rational(v) for v in row] for row in rows])


def _to_rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def to_fraction(value) -> Fraction:
    """Convert a sympy rational (or int) to a Fraction."""
    if isinstance(value, int):
        return Fraction(value)
    value = sympy.Rational(value)
    return Fraction(int(value.p), int(value.q))


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a rational matrix (0 for an empty one)."""
    if not rows or not rows[0]:
        return 0
    return to_sympy(rows).rank()


def independent_rows(rows: Sequence[Sequence], rhs: Sequence) -> tuple[list[list[Fraction]], list[Fraction]]:
    """
    A maximal linearly independent subset of the rows of [A | b].

    Redundant equality rows only change the rank, never the solution set, as
    long as the system is consistent.
    """
    if not rows:
        return [], []
    _, pivots = to_sympy(rows).T.rref()
    keep = list(pivots)
    return [[Fraction(v) for v in rows[i]] for i in keep], [Fraction(rhs[i]) for i in keep]


def solve_square(matrix: Sequence[Sequence], rhs: Sequence) -> Optional[list[Fraction]]:
    """
    Solve a square system exactly.

    Returns:
        The unique solution, or None when the matrix is singular
    """
    m = to_sympy(matrix)
    if m.det() == 0:
        return None
    solution = m.LUsolve(to_sympy([[v] for v in rhs]))
    return [to_fraction(v) for v in solution]


def nullspace_vector(rows: Sequence[Sequence]) -> Optional[list[Fraction]]:
    """
    The generator of a one-dimensional null space.

    Returns:
        The generator, or None when the null space is not one-dimensional
    """
    basis = to_sympy(rows).nullspace()
    if len(basis) != 1:
        return None
    return [to_fraction(v) for v in basis[0]]


__all__ = [
    "to_sympy",
    "to_fraction",
    "rank",
    "independent_rows",
    "solve_square",
    "nullspace_vector",
]
