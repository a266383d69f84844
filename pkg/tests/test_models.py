"""Tests for core data models."""

from fractions import Fraction

import pytest

from core.exceptions import ValidationException
from core.models import AnchorData, MolpInstance, RunStats, SolveResult, TargetSet


class TestMolpInstance:
    """Tests for MolpInstance model."""

    def test_dimensions(self, simplex2):
        """Test p, n and m."""
        assert (simplex2.p, simplex2.n, simplex2.m) == (2, 3, 1)

    def test_entries_are_fractions(self, simplex2):
        """Test that plain ints are converted to Fractions."""
        assert all(isinstance(v, Fraction) for row in simplex2.C for v in row)
        assert isinstance(simplex2.b[0], Fraction)

    def test_immutable(self, simplex2):
        """Test that MolpInstance is immutable."""
        with pytest.raises(AttributeError):
            simplex2.b = (2,)

    def test_ragged_objective_rows(self):
        with pytest.raises(ValidationException) as exc_info:
            MolpInstance.from_rows([[1, 0], [1]], [[1, 1]], [1])
        assert exc_info.value.field == "C"

    def test_constraint_width_mismatch(self):
        with pytest.raises(ValidationException) as exc_info:
            MolpInstance.from_rows([[1, 0]], [[1, 1, 1]], [1])
        assert exc_info.value.field == "A"

    def test_rhs_length_mismatch(self):
        with pytest.raises(ValidationException) as exc_info:
            MolpInstance.from_rows([[1, 0]], [[1, 1]], [1, 2])
        assert exc_info.value.field == "b"

    def test_no_objectives(self):
        with pytest.raises(ValidationException):
            MolpInstance.from_rows([], [[1, 1]], [1])

    def test_no_constraints_allowed(self):
        """Test that m = 0 is a valid shape (X is then unbounded)."""
        instance = MolpInstance.from_rows([[1, 0]], [], [])
        assert instance.m == 0
        assert instance.n == 2

    def test_outcome(self, simplex2):
        assert simplex2.outcome((Fraction(1, 4), Fraction(1, 2), Fraction(1, 4))) == (Fraction(1, 4), Fraction(1, 2))

    def test_restrict_objectives(self, simplex2):
        """Test that a sub-problem keeps X and the chosen rows."""
        sub = simplex2.restrict_objectives((1,))
        assert sub.p == 1
        assert sub.C == (simplex2.C[1],)
        assert sub.A == simplex2.A
        assert sub.b == simplex2.b


class TestAnchorData:
    """Tests for AnchorData model."""

    def test_p(self):
        assert AnchorData(y_hat=(-1, -1, -1), y_max=(1, 1, 1), y_min=(0, 0, 0)).p == 3


class TestRunStats:
    """Tests for RunStats model."""

    def test_defaults(self):
        stats = RunStats()
        assert stats.iterations == 0
        assert stats.vertex_counts == ()

    def test_to_dict(self):
        """Test conversion to dictionary, with wall time in milliseconds."""
        stats = RunStats(iterations=2, lp_solves=9, vertex_counts=(4, 5), final_vertex_count=5,
                         final_non_efficient_count=3, adjacency_checks=12, wall_time=0.25)
        assert stats.to_dict() == {
            "iterations": 2,
            "lp_solves": 9,
            "vertex_counts": [4, 5],
            "final_vertex_count": 5,
            "final_non_efficient_count": 3,
            "adjacency_checks": 12,
            "wall_time_ms": 250.0,
        }

    def test_from_dict(self):
        stats = RunStats.from_dict({"iterations": 3, "vertex_counts": [4, 5, 6], "wall_time_ms": 500})
        assert stats.iterations == 3
        assert stats.vertex_counts == (4, 5, 6)
        assert stats.wall_time == 0.5
        assert stats.lp_solves == 0


class TestSolveResult:
    """Tests for SolveResult model."""

    def test_str(self):
        result = SolveResult("oracle", ((Fraction(1), Fraction(0)),))
        assert str(result) == "oracle: 1 efficient extreme outcomes"

    def test_no_polytope_by_default(self):
        assert SolveResult("oracle", ()).final_polytope is None


class TestTargetSet:
    """Tests for TargetSet enum."""

    def test_values(self):
        assert TargetSet("Yleq") == TargetSet.YLEQ
        assert TargetSet.YSQUARE.value == "Ysquare"
