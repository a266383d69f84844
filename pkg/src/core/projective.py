"""
Oriented projective geometry kernel.

Points of oriented projective d-space are stored as signed homogeneous
coordinates: (d+1)-tuples identified up to multiplication by a *positive*
scalar. Half-spaces use the same representation for their coefficients and
contain every point x with h·x >= 0.

Both value types are immutable and always held in canonical form (coprime
integers, sign pattern preserved), so structural equality is geometric
equality and points can be deduplicated with sets.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from core.exceptions import (
    DimensionError,
    InvalidCombination,
    InvalidCoordinates,
    NotVisible,
    OppositePoints,
)

Rational = Fraction
Number = Union[int, Fraction]


def _canonical_integers(raw: Iterable[Number]) -> tuple[int, ...]:
    """
    Scale a rational vector by the unique positive factor that makes it a
    vector of coprime integers.

    Raises:
        InvalidCoordinates: If every entry is zero
    """
    values = [Fraction(x) for x in raw]
    if not values or all(v == 0 for v in values):
        raise InvalidCoordinates(f"All-zero coordinates {tuple(values)} do not represent a point")

    scale = lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    divisor = 0
    for x in ints:
        divisor = gcd(divisor, x)
    return tuple(x // divisor for x in ints)


class PointClass(str, Enum):
    """Position of a point relative to the visible half-space."""

    VISIBLE = "visible"
    INFINITE = "infinite"
    INVISIBLE = "invisible"


@dataclass(frozen=True, order=True)
class HPoint:
    """
    A point of oriented projective d-space in signed homogeneous coordinates.

    Attributes:
        coords: d+1 coprime integers; the last entry carries the visibility sign
    """

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", _canonical_integers(self.coords))

    @property
    def dimension(self) -> int:
        """Dimension d of the ambient projective space."""
        return len(self.coords) - 1

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass(frozen=True, order=True)
class HHalfspace:
    """
    A projective half-space {x | coeffs·x >= 0}.

    The bounding hyperplane is {x | coeffs·x = 0}. Only positive rescaling
    preserves a half-space, so the canonical form keeps the sign pattern.

    Attributes:
        coeffs: d+1 coprime integers
    """

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _canonical_integers(self.coeffs))

    @property
    def dimension(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def canonicalize(raw: Sequence[Number]) -> HPoint:
    """
    Build the canonical point positively proportional to ``raw``.

    Args:
        raw: d+1 rational coordinates, not all zero

    Returns:
        Canonical HPoint

    Raises:
        InvalidCoordinates: If every coordinate is zero

    Examples:
        >>> canonicalize((4, 6, 2)).coords
        (2, 3, 1)
        >>> canonicalize((-2, -3, -1)).coords
        (-2, -3, -1)
    """
    return HPoint(tuple(raw))


def canonicalize_halfspace(raw: Sequence[Number]) -> HHalfspace:
    """Build the canonical half-space positively proportional to ``raw``."""
    return HHalfspace(tuple(raw))


def classify(p: HPoint) -> PointClass:
    """Classify a point by the sign of its last coordinate."""
    last = p.coords[-1]
    if last > 0:
        return PointClass.VISIBLE
    if last == 0:
        return PointClass.INFINITE
    return PointClass.INVISIBLE


def lift(e: Sequence[Number]) -> HPoint:
    """Copy of a Euclidean point in visible space: append a unit coordinate."""
    return HPoint(tuple(e) + (1,))


def project(p: HPoint) -> tuple[Fraction, ...]:
    """
    Euclidean coordinates of a visible point.

    Raises:
        NotVisible: If the point is at infinity or invisible
    """
    last = p.coords[-1]
    if last <= 0:
        raise NotVisible(f"Point {p} is {classify(p).value}, not visible")
    return tuple(Fraction(c, last) for c in p.coords[:-1])


def opposite(p: HPoint) -> HPoint:
    """The opposite point, obtained by negating every coordinate."""
    return HPoint(tuple(-c for c in p.coords))


def dot(h: HHalfspace, p: HPoint) -> int:
    """
    Exact dot product of half-space coefficients with point coordinates.

    Raises:
        DimensionError: If the operands have different lengths
    """
    if len(h.coeffs) != len(p.coords):
        raise DimensionError(
            f"Half-space of dimension {h.dimension} cannot test point of dimension {p.dimension}"
        )
    return sum(a * b for a, b in zip(h.coeffs, p.coords))


def side(h: HHalfspace, p: HPoint) -> int:
    """
    Which side of ``h`` the point ``p`` lies on.

    Returns:
        +1 strictly inside, 0 on the bounding hyperplane, -1 outside
    """
    value = dot(h, p)
    return (value > 0) - (value < 0)


def combine(u: HPoint, v: HPoint, alpha: Number, beta: Number) -> HPoint:
    """
    Non-negative combination alpha*u + beta*v, a point of the segment [u, v].

    Args:
        u: First endpoint
        v: Second endpoint
        alpha: Weight of u (>= 0)
        beta: Weight of v (>= 0)

    Returns:
        Canonical combination

    Raises:
        InvalidCombination: If a weight is negative or both are zero
        OppositePoints: If u and v are opposite
        DimensionError: If u and v have different dimensions
    """
    alpha = Fraction(alpha)
    beta = Fraction(beta)
    if alpha < 0 or beta < 0:
        raise InvalidCombination(f"Weights must be non-negative, got {alpha} and {beta}")
    if alpha == 0 and beta == 0:
        raise InvalidCombination("At least one weight must be positive")
    if len(u.coords) != len(v.coords):
        raise DimensionError(f"Cannot combine points of dimension {u.dimension} and {v.dimension}")
    if opposite(u) == v:
        raise OppositePoints(f"{u} and {v} are opposite points")
    return HPoint(tuple(alpha * a + beta * b for a, b in zip(u.coords, v.coords)))


def visible_halfspace(d: int) -> HHalfspace:
    """The visible half-space (0,...,0,1) of oriented projective d-space."""
    return HHalfspace((0,) * d + (1,))


def halfspace_leq(normal: Sequence[Number], offset: Number) -> HHalfspace:
    """
    Homogeneous form of the Euclidean half-space {y | normal·y <= offset}.

    The coefficients are (-normal, offset), so lifted points satisfy the
    Euclidean inequality exactly when side >= 0.
    """
    return HHalfspace(tuple(-Fraction(a) for a in normal) + (Fraction(offset),))


def halfspace_geq(normal: Sequence[Number], offset: Number) -> HHalfspace:
    """Homogeneous form of {y | normal·y >= offset}."""
    return HHalfspace(tuple(Fraction(a) for a in normal) + (-Fraction(offset),))


__all__ = [
    "Rational",
    "PointClass",
    "HPoint",
    "HHalfspace",
    "canonicalize",
    "canonicalize_halfspace",
    "classify",
    "lift",
    "project",
    "opposite",
    "dot",
    "side",
    "combine",
    "visible_halfspace",
    "halfspace_leq",
    "halfspace_geq",
]
