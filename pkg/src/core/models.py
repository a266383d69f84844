"""
Domain models for multiobjective linear programs and solver runs.

This module defines the core data structures used throughout the application.
All models are immutable (frozen dataclasses) to prevent accidental mutation.
"""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, Optional, Sequence

from core.exceptions import ValidationException

if TYPE_CHECKING:
    from core.dd import DDPolytope

Vector = tuple[Fraction, ...]


def _vector(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def _matrix(rows: Iterable[Iterable]) -> tuple[Vector, ...]:
    return tuple(_vector(row) for row in rows)


class TargetSet(str, Enum):
    """Efficiency-equivalent polyhedron a membership test refers to."""

    YLEQ = "Yleq"
    YSQUARE = "Ysquare"


@dataclass(frozen=True)
class MolpInstance:
    """
    A multiobjective linear program max Cx over X = {x | Ax = b, x >= 0}.

    Attributes:
        C: p x n objective matrix
        A: m x n constraint matrix
        b: m right-hand side
    """

    C: tuple[Vector, ...]
    A: tuple[Vector, ...]
    b: Vector

    @classmethod
    def from_rows(cls, C: Sequence[Sequence], A: Sequence[Sequence], b: Sequence) -> "MolpInstance":
        """
        Create an instance from plain rows, checking dimensions.

        Raises:
            ValidationException: If the matrix shapes disagree
        """
        instance = cls(_matrix(C), _matrix(A), _vector(b))
        instance.validate_dimensions()
        return instance

    @property
    def p(self) -> int:
        """Number of objectives."""
        return len(self.C)

    @property
    def n(self) -> int:
        """Number of variables."""
        if self.C:
            return len(self.C[0])
        return len(self.A[0]) if self.A else 0

    @property
    def m(self) -> int:
        """Number of equality constraints."""
        return len(self.A)

    def validate_dimensions(self) -> None:
        """
        Check that C, A and b have consistent shapes.

        Raises:
            ValidationException: On any mismatch
        """
        if self.p < 1:
            raise ValidationException("at least one objective row is required", "C")
        n = self.n
        if n < 1:
            raise ValidationException("at least one variable is required", "C")
        for i, row in enumerate(self.C):
            if len(row) != n:
                raise ValidationException(f"row {i} has {len(row)} entries, expected {n}", "C")
        for i, row in enumerate(self.A):
            if len(row) != n:
                raise ValidationException(f"row {i} has {len(row)} entries, expected {n}", "A")
        if len(self.b) != self.m:
            raise ValidationException(f"has {len(self.b)} entries, expected {self.m}", "b")

    def restrict_objectives(self, indices: Sequence[int]) -> "MolpInstance":
        """Sub-problem keeping only the objective rows in ``indices`` (same X)."""
        return MolpInstance(tuple(self.C[i] for i in indices), self.A, self.b)

    def outcome(self, x: Sequence[Fraction]) -> Vector:
        """The outcome Cx of a decision vector."""
        return tuple(sum((c * v for c, v in zip(row, x)), Fraction(0)) for row in self.C)


@dataclass(frozen=True)
class AnchorData:
    """
    Reference points in objective space.

    Attributes:
        y_hat: Anchor point, strictly dominated by every outcome
        y_max: Componentwise objective maxima (ideal point)
        y_min: Componentwise objective minima
    """

    y_hat: Vector
    y_max: Vector
    y_min: Vector

    @property
    def p(self) -> int:
        return len(self.y_hat)


@dataclass(frozen=True)
class RunStats:
    """
    Measurements taken during one outer approximation run.

    Attributes:
        iterations: Number of cuts made
        lp_solves: Linear programs solved, initialisation included
        vertex_counts: Vertex count of each intermediate polytope after its cut
        final_vertex_count: Vertices of the final polytope
        final_non_efficient_count: Final vertices that are not efficient extreme outcomes
        adjacency_checks: Incidence comparisons made by all cuts
        wall_time: Elapsed seconds
    """

    iterations: int = 0
    lp_solves: int = 0
    vertex_counts: tuple[int, ...] = ()
    final_vertex_count: int = 0
    final_non_efficient_count: int = 0
    adjacency_checks: int = 0
    wall_time: float = 0.0

    def to_dict(self) -> dict:
        """Convert to dictionary for serialization (wall time in milliseconds)."""
        return {
            "iterations": self.iterations,
            "lp_solves": self.lp_solves,
            "vertex_counts": list(self.vertex_counts),
            "final_vertex_count": self.final_vertex_count,
            "final_non_efficient_count": self.final_non_efficient_count,
            "adjacency_checks": self.adjacency_checks,
            "wall_time_ms": round(self.wall_time * 1000, 3),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RunStats":
        """Create from dictionary."""
        return cls(
            iterations=data.get("iterations", 0),
            lp_solves=data.get("lp_solves", 0),
            vertex_counts=tuple(data.get("vertex_counts", ())),
            final_vertex_count=data.get("final_vertex_count", 0),
            final_non_efficient_count=data.get("final_non_efficient_count", 0),
            adjacency_checks=data.get("adjacency_checks", 0),
            wall_time=data.get("wall_time_ms", 0.0) / 1000,
        )


@dataclass(frozen=True)
class SolveResult:
    """
    Outcome of running one algorithm on one instance.

    Attributes:
        algorithm: "projective", "euclidean" or "oracle"
        efficient_extreme_outcomes: Sorted, pairwise distinct outcome vectors
        stats: Run measurements
        final_polytope: Last polytope built (None for the oracle)
    """

    algorithm: str
    efficient_extreme_outcomes: tuple[Vector, ...]
    stats: RunStats = field(default_factory=RunStats)
    final_polytope: Optional["DDPolytope"] = None

    def __str__(self) -> str:
        return f"{self.algorithm}: {len(self.efficient_extreme_outcomes)} efficient extreme outcomes"


__all__ = [
    "Vector",
    "TargetSet",
    "MolpInstance",
    "AnchorData",
    "RunStats",
    "SolveResult",
]
