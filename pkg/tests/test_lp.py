"""Tests for the exact rational simplex solver."""

from fractions import Fraction

import pytest

from core.exceptions import CertificateError, NoDualAvailable, ValidationException
from core.lp import LinearProgram, LpResult, LpSolver, LpStatus, certify, dual_witness, solve


@pytest.mark.unit
class TestSolve:
    """Tests for solve statuses and optimal values."""

    def test_simple_optimum(self):
        lp = LinearProgram.build([1, 0], a=[[1, 1]], b=[1])
        result = solve(lp)
        assert result.status == LpStatus.OPTIMAL
        assert result.x == (1, 0)
        assert result.value == 1
        assert result.dual == (1,)

    def test_values_are_fractions(self):
        lp = LinearProgram.build([1, 1], a=[[2, 3]], b=[1])
        result = solve(lp)
        assert result.value == Fraction(1, 2)
        assert all(isinstance(v, Fraction) for v in result.x)

    def test_infeasible(self):
        lp = LinearProgram.build([0], a=[[1]], b=[-1])
        result = solve(lp)
        assert result.status == LpStatus.INFEASIBLE
        assert result.x == ()
        assert result.value is None

    def test_unbounded(self):
        lp = LinearProgram.build([1, 0], a=[[0, 0]], b=[0])
        assert solve(lp).status == LpStatus.UNBOUNDED

    def test_unbounded_without_rows(self):
        assert solve(LinearProgram.build([1, -1])).status == LpStatus.UNBOUNDED

    def test_empty_program_is_optimal_at_zero(self):
        result = solve(LinearProgram.build([-1, 0]))
        assert result.optimal
        assert result.value == 0

    def test_inequality_rows(self):
        """max x1 + x2 s.t. x1 <= 2, x2 <= 3, x1 + x2 >= 1."""
        lp = LinearProgram.build(
            [1, 1],
            le=[([1, 0], 2), ([0, 1], 3)],
            ge=[([1, 1], 1)],
        )
        result = solve(lp)
        assert result.value == 5
        assert len(result.dual) == lp.row_count == 3

    def test_negative_rhs_row(self):
        """A row with b < 0 is flipped internally; the dual comes back unflipped."""
        lp = LinearProgram.build([-1, 0], a=[[-1, 1]], b=[-2])
        result = solve(lp)
        assert result.value == -2
        assert result.x == (2, 0)
        certify(lp, result)

    def test_redundant_rows(self):
        lp = LinearProgram.build([1, 2, 0], a=[[1, 1, 1], [2, 2, 2]], b=[1, 2])
        result = solve(lp)
        assert result.value == 2
        certify(lp, result)

    def test_degenerate_cycling_example(self):
        """Classic degenerate program on which textbook pivoting cycles."""
        lp = LinearProgram.build(
            [Fraction(3, 4), -20, Fraction(1, 2), -6],
            le=[
                ([Fraction(1, 4), -8, -1, 9], 0),
                ([Fraction(1, 2), -12, Fraction(-1, 2), 3], 0),
                ([0, 0, 1, 0], 1),
            ],
        )
        result = solve(lp)
        assert result.status == LpStatus.OPTIMAL
        assert result.value == Fraction(5, 4)

    def test_dimension_mismatch(self):
        with pytest.raises(ValidationException):
            LinearProgram.build([1, 0], a=[[1, 1, 1]], b=[1])

    def test_rhs_count_mismatch(self):
        with pytest.raises(ValidationException):
            LinearProgram.build([1, 0], a=[[1, 1]], b=[1, 2])


@pytest.mark.unit
class TestCertificates:
    """Tests for exact certificate checks."""

    def test_dual_witness_of_optimal(self):
        lp = LinearProgram.build([1, 0], a=[[1, 1]], b=[1])
        assert dual_witness(lp, solve(lp)) == (1,)

    def test_no_dual_for_infeasible(self):
        lp = LinearProgram.build([0], a=[[1]], b=[-1])
        with pytest.raises(NoDualAvailable):
            dual_witness(lp, solve(lp))

    def test_wrong_value_detected(self):
        lp = LinearProgram.build([1, 0], a=[[1, 1]], b=[1])
        forged = LpResult(LpStatus.OPTIMAL, x=(0, 1), value=Fraction(0), dual=(1,))
        with pytest.raises(CertificateError):
            certify(lp, forged)

    def test_infeasible_primal_detected(self):
        lp = LinearProgram.build([1, 0], a=[[1, 1]], b=[1])
        forged = LpResult(LpStatus.OPTIMAL, x=(2, 0), value=Fraction(2), dual=(1,))
        with pytest.raises(CertificateError) as exc:
            certify(lp, forged)
        assert exc.value.check == "primal feasibility"

    def test_bad_dual_detected(self):
        lp = LinearProgram.build([1, 0], a=[[1, 1]], b=[1])
        forged = LpResult(LpStatus.OPTIMAL, x=(1, 0), value=Fraction(1), dual=(Fraction(1, 2),))
        with pytest.raises(CertificateError) as exc:
            certify(lp, forged)
        assert exc.value.check == "dual feasibility"


@pytest.mark.unit
class TestLpSolver:
    """Tests for the solver front end."""

    def test_counts_solves(self):
        solver = LpSolver()
        lp = LinearProgram.build([1], a=[[1]], b=[1])
        solver.solve(lp)
        solver.solve(lp)
        assert solver.solves == 2

    def test_counts_failed_solves(self):
        solver = LpSolver(verify_certificates=False)
        solver.solve(LinearProgram.build([0], a=[[1]], b=[-1]))
        assert solver.solves == 1
