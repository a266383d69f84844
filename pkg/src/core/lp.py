"""
Exact rational linear programming.

Solves max c·x subject to Ax = b, optional inequality rows, and x >= 0 with a
two-phase tableau simplex over ``fractions.Fraction``. Bland's rule picks both
the entering and the leaving variable, which rules out cycling on degenerate
problems. Every optimal result carries a dual solution, and with certificate
verification enabled each one is checked exactly (primal feasibility, dual
feasibility, strong duality, complementary slackness) before it is returned.
"""

import logging
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from constants import DEFAULT_VERIFY_CERTIFICATES
from core.exceptions import CertificateError, NoDualAvailable, ValidationException

logger = logging.getLogger(__name__)


class ConstraintSense(str, Enum):
    """Direction of an inequality row."""

    LE = "<="
    GE = ">="


class LpStatus(str, Enum):
    """Exact outcome of a solve."""

    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class Inequality:
    """
    One inequality row ``coeffs·x (<= | >=) rhs``.

    Converted to an equality with a slack column before solving.
    """

    coeffs: tuple[Fraction, ...]
    sense: ConstraintSense
    rhs: Fraction


@dataclass(frozen=True)
class LinearProgram:
    """
    A linear program max c·x s.t. Ax = b, inequality rows, x >= 0.

    Attributes:
        objective: Cost vector c (length n)
        a: Equality matrix A (m rows of length n)
        b: Equality right-hand side (length m)
        inequalities: Extra inequality rows
    """

    objective: tuple[Fraction, ...]
    a: tuple[tuple[Fraction, ...], ...] = ()
    b: tuple[Fraction, ...] = ()
    inequalities: tuple[Inequality, ...] = ()

    @classmethod
    def build(
        cls,
        objective: Sequence,
        a: Sequence[Sequence] = (),
        b: Sequence = (),
        le: Sequence[tuple[Sequence, object]] = (),
        ge: Sequence[tuple[Sequence, object]] = (),
    ) -> "LinearProgram":
        """
        Build a program from plain numbers, converting everything to Fractions.

        Args:
            objective: Cost vector
            a: Equality rows
            b: Equality right-hand side
            le: (coeffs, rhs) pairs for ``coeffs·x <= rhs``
            ge: (coeffs, rhs) pairs for ``coeffs·x >= rhs``

        Raises:
            ValidationException: If dimensions are inconsistent
        """
        n = len(objective)
        rows = tuple(tuple(Fraction(v) for v in row) for row in a)
        rhs = tuple(Fraction(v) for v in b)
        if len(rows) != len(rhs):
            raise ValidationException(f"{len(rows)} equality rows but {len(rhs)} right-hand sides", "lp")
        inequalities = tuple(
            Inequality(tuple(Fraction(v) for v in coeffs), sense, Fraction(r))
            for sense, pairs in ((ConstraintSense.LE, le), (ConstraintSense.GE, ge))
            for coeffs, r in pairs
        )
        for row in rows + tuple(ineq.coeffs for ineq in inequalities):
            if len(row) != n:
                raise ValidationException(f"Row of length {len(row)} in a program with {n} variables", "lp")
        return cls(tuple(Fraction(v) for v in objective), rows, rhs, inequalities)

    @property
    def n(self) -> int:
        """Number of structural variables."""
        return len(self.objective)

    @property
    def row_count(self) -> int:
        """Equality rows plus inequality rows; the length of the dual vector."""
        return len(self.a) + len(self.inequalities)

    def standard_form(self) -> tuple[list[list[Fraction]], list[Fraction], list[Fraction]]:
        """
        Equality-only form with one slack column per inequality row.

        Returns:
            (rows, rhs, costs) where slack columns follow the structural ones
        """
        k = len(self.inequalities)
        zero = Fraction(0)
        rows = [list(row) + [zero] * k for row in self.a]
        rhs = list(self.b)
        for idx, ineq in enumerate(self.inequalities):
            slack = [zero] * k
            slack[idx] = Fraction(1) if ineq.sense == ConstraintSense.LE else Fraction(-1)
            rows.append(list(ineq.coeffs) + slack)
            rhs.append(ineq.rhs)
        costs = list(self.objective) + [zero] * k
        return rows, rhs, costs


@dataclass(frozen=True)
class LpResult:
    """
    Result of a solve.

    Attributes:
        status: Optimal, infeasible or unbounded
        x: Optimal values of the structural variables (empty otherwise)
        value: Optimal objective value (None otherwise)
        dual: One multiplier per row, equality rows first (empty otherwise)
        pivots: Simplex pivots performed across both phases
    """

    status: LpStatus
    x: tuple[Fraction, ...] = ()
    value: Optional[Fraction] = None
    dual: tuple[Fraction, ...] = ()
    pivots: int = 0

    @property
    def optimal(self) -> bool:
        return self.status == LpStatus.OPTIMAL


class _Tableau:
    """Dense simplex tableau with an identity block of artificial columns."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction]):
        self.m = len(rows)
        self.n = len(rows[0]) if rows else 0
        self.signs = []
        self.table = []
        self.rhs = []
        for i, (row, r) in enumerate(zip(rows, rhs)):
            sign = -1 if r < 0 else 1
            self.signs.append(sign)
            artificial = [Fraction(0)] * self.m
            artificial[i] = Fraction(1)
            self.table.append([sign * v for v in row] + artificial)
            self.rhs.append(sign * r)
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0

    def is_artificial(self, column: int) -> bool:
        return column >= self.n

    def pivot(self, row: int, column: int) -> None:
        pivot_row = self.table[row]
        factor = pivot_row[column]
        self.table[row] = [v / factor for v in pivot_row]
        self.rhs[row] /= factor
        pivot_row = self.table[row]
        for i in range(self.m):
            if i == row:
                continue
            coeff = self.table[i][column]
            if coeff == 0:
                continue
            self.table[i] = [v - coeff * p for v, p in zip(self.table[i], pivot_row)]
            self.rhs[i] -= coeff * self.rhs[row]
        self.basis[row] = column
        self.pivots += 1

    def reduced_costs(self, costs: list[Fraction]) -> list[Fraction]:
        width = self.n + self.m
        reduced = list(costs)
        for i, b in enumerate(self.basis):
            cb = costs[b]
            if cb == 0:
                continue
            row = self.table[i]
            for j in range(width):
                if row[j] != 0:
                    reduced[j] -= cb * row[j]
        return reduced

    def optimize(self, costs: list[Fraction], allow_artificial: bool) -> bool:
        """
        Run Bland's rule to optimality.

        Returns:
            False if the objective is unbounded along some column
        """
        width = self.n + self.m if allow_artificial else self.n
        while True:
            reduced = self.reduced_costs(costs)
            entering = next((j for j in range(width) if reduced[j] > 0), None)
            if entering is None:
                return True
            leaving = None
            best = None
            for i in range(self.m):
                coeff = self.table[i][entering]
                if coeff <= 0:
                    continue
                key = (self.rhs[i] / coeff, self.basis[i])
                if best is None or key < best:
                    best = key
                    leaving = i
            if leaving is None:
                return False
            self.pivot(leaving, entering)

    def drive_out_artificials(self) -> None:
        """Pivot zero-level artificials out of the basis where a real column allows it."""
        for i in range(self.m):
            if not self.is_artificial(self.basis[i]):
                continue
            column = next((j for j in range(self.n) if self.table[i][j] != 0), None)
            if column is None:
                logger.debug(f"Row {i} is redundant; its artificial stays basic at zero")
                continue
            self.pivot(i, column)

    def values(self) -> list[Fraction]:
        x = [Fraction(0)] * (self.n + self.m)
        for i, b in enumerate(self.basis):
            x[b] = self.rhs[i]
        return x

    def dual(self, costs: list[Fraction]) -> list[Fraction]:
        """y = c_B B^-1, read off the artificial block and unflipped per row."""
        y = []
        for i in range(self.m):
            total = Fraction(0)
            for k, b in enumerate(self.basis):
                if costs[b] != 0:
                    total += costs[b] * self.table[k][self.n + i]
            y.append(self.signs[i] * total)
        return y


def _run_simplex(lp: LinearProgram) -> LpResult:
    rows, rhs, costs = lp.standard_form()
    width = lp.n + len(lp.inequalities)
    if not rows:
        if any(c > 0 for c in costs):
            return LpResult(LpStatus.UNBOUNDED)
        return LpResult(LpStatus.OPTIMAL, tuple(Fraction(0) for _ in range(lp.n)), Fraction(0), ())

    tableau = _Tableau(rows, rhs)
    phase_one_costs = [Fraction(0)] * width + [Fraction(-1)] * tableau.m
    tableau.optimize(phase_one_costs, allow_artificial=True)
    infeasibility = sum(
        (tableau.rhs[i] for i, b in enumerate(tableau.basis) if tableau.is_artificial(b)),
        Fraction(0),
    )
    if infeasibility > 0:
        logger.debug(f"Phase one ended with infeasibility {infeasibility}")
        return LpResult(LpStatus.INFEASIBLE, pivots=tableau.pivots)

    tableau.drive_out_artificials()
    phase_two_costs = list(costs) + [Fraction(0)] * tableau.m
    if not tableau.optimize(phase_two_costs, allow_artificial=False):
        return LpResult(LpStatus.UNBOUNDED, pivots=tableau.pivots)

    values = tableau.values()
    x = tuple(values[: lp.n])
    value = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return LpResult(
        LpStatus.OPTIMAL,
        x=x,
        value=value,
        dual=tuple(tableau.dual(phase_two_costs)),
        pivots=tableau.pivots,
    )


def _slack_values(lp: LinearProgram, x: Sequence[Fraction]) -> list[Fraction]:
    slacks = []
    for ineq in lp.inequalities:
        activity = sum((a * v for a, v in zip(ineq.coeffs, x)), Fraction(0))
        if ineq.sense == ConstraintSense.LE:
            slacks.append(ineq.rhs - activity)
        else:
            slacks.append(activity - ineq.rhs)
    return slacks


def certify(lp: LinearProgram, result: LpResult) -> None:
    """
    Check an optimal result against its primal and dual certificate, exactly.

    Raises:
        NoDualAvailable: If the result is not optimal
        CertificateError: If primal feasibility, dual feasibility, strong
            duality or complementary slackness fails
    """
    if not result.optimal:
        raise NoDualAvailable(result.status.value)

    rows, rhs, costs = lp.standard_form()
    x_full = list(result.x) + _slack_values(lp, result.x)
    y = result.dual
    if len(y) != len(rows):
        raise CertificateError("dual length", f"{len(y)} multipliers for {len(rows)} rows")

    if any(v < 0 for v in x_full):
        raise CertificateError("primal feasibility", "negative variable or violated inequality")
    for i, (row, r) in enumerate(zip(rows, rhs)):
        if sum((a * v for a, v in zip(row, x_full)), Fraction(0)) != r:
            raise CertificateError("primal feasibility", f"row {i} not satisfied")

    for j, c in enumerate(costs):
        column_value = sum((y[i] * rows[i][j] for i in range(len(rows))), Fraction(0))
        if column_value < c:
            raise CertificateError("dual feasibility", f"column {j}: {column_value} < {c}")
        if x_full[j] > 0 and column_value != c:
            raise CertificateError("complementary slackness", f"column {j}")

    primal_value = sum((c * v for c, v in zip(lp.objective, result.x)), Fraction(0))
    dual_value = sum((r * v for r, v in zip(rhs, y)), Fraction(0))
    if primal_value != dual_value or primal_value != result.value:
        raise CertificateError("strong duality", f"primal {primal_value}, dual {dual_value}")


def dual_witness(lp: LinearProgram, result: LpResult) -> tuple[Fraction, ...]:
    """
    Certified dual solution of an optimal result.

    Returns:
        y with yᵀA >= cᵀ over the slack-augmented matrix and b·y = c·x

    Raises:
        NoDualAvailable: If the result is not optimal
    """
    certify(lp, result)
    return result.dual


class LpSolver:
    """
    Stateless-per-solve simplex front end with a thread-safe solve counter.

    Solves are independent, so one solver may be shared across threads; only
    the counter is guarded.
    """

    def __init__(self, verify_certificates: bool = DEFAULT_VERIFY_CERTIFICATES):
        """
        Initialize solver.

        Args:
            verify_certificates: Certify every optimal result before returning it
        """
        self.verify_certificates = verify_certificates
        self._lock = threading.Lock()
        self._solves = 0

    @property
    def solves(self) -> int:
        """Number of programs solved so far."""
        with self._lock:
            return self._solves

    def solve(self, lp: LinearProgram) -> LpResult:
        """Solve ``lp`` exactly."""
        with self._lock:
            self._solves += 1
        result = _run_simplex(lp)
        if result.optimal and self.verify_certificates:
            certify(lp, result)
        return result


_default_solver = LpSolver()


def solve(lp: LinearProgram) -> LpResult:
    """Solve with the module's default (certifying) solver."""
    return _default_solver.solve(lp)


__all__ = [
    "ConstraintSense",
    "LpStatus",
    "Inequality",
    "LinearProgram",
    "LpResult",
    "LpSolver",
    "solve",
    "certify",
    "dual_witness",
]
