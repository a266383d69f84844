"""
Outcome-space operations for a multiobjective linear program.

``OutcomeSpace`` wraps a validated instance together with an LP solver and
provides the steps shared by both outer approximation drivers: ideal and
anchor points, membership in Y^<= and Y^box, efficiency checks, the exact
boundary line search and supporting half-space generation.

Y^<= is the set of points dominated by some outcome; Y^box is Y^<= cut off
below by the anchor point y_hat.
"""

import logging
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from constants import DEFAULT_ANCHOR_OFFSET
from core.exceptions import (
    BadSegment,
    InfeasibleInstance,
    NotInOutcomeSet,
    NotOnBoundary,
    UnboundedInstance,
)
from core.lp import LinearProgram, LpResult, LpSolver, LpStatus
from core.models import AnchorData, MolpInstance, TargetSet, Vector
from core.projective import HHalfspace, halfspace_geq, halfspace_leq

logger = logging.getLogger(__name__)

ZERO = Fraction(0)


def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), ZERO)


class OutcomeSpace:
    """
    Objective-space view of a MOLP instance.

    Construction validates the standing assumption that X is nonempty and
    bounded. The anchor data is computed once, on first use.
    """

    def __init__(
        self,
        instance: MolpInstance,
        solver: Optional[LpSolver] = None,
        anchor_offset: int = DEFAULT_ANCHOR_OFFSET,
        validate: bool = True,
    ):
        """
        Initialize outcome space.

        Args:
            instance: The MOLP instance
            solver: LP solver to use (a fresh certifying solver by default)
            anchor_offset: Positive distance of y_hat below the objective minima
            validate: Check that X is nonempty and bounded

        Raises:
            InfeasibleInstance: If X is empty
            UnboundedInstance: If X is unbounded
        """
        self.instance = instance
        self.solver = solver or LpSolver()
        self.anchor_offset = Fraction(anchor_offset)
        self._anchor: Optional[AnchorData] = None
        self._feasible_x: Optional[Vector] = None
        if validate:
            self.validate_instance()

    @property
    def p(self) -> int:
        return self.instance.p

    def _program(self, objective: Sequence, ge=(), le=(), extra_columns: int = 0) -> LinearProgram:
        pad = [0] * extra_columns
        return LinearProgram.build(
            objective,
            a=[list(row) + pad for row in self.instance.A],
            b=self.instance.b,
            ge=ge,
            le=le,
        )

    def _solve(self, lp: LinearProgram) -> LpResult:
        return self.solver.solve(lp)

    def validate_instance(self) -> None:
        """
        Check that X = {x | Ax = b, x >= 0} is nonempty and bounded.

        Raises:
            InfeasibleInstance: If X is empty
            UnboundedInstance: If some variable is unbounded over X
        """
        inst = self.instance
        result = self._solve(self._program([0] * inst.n))
        if result.status != LpStatus.OPTIMAL:
            raise InfeasibleInstance("the feasible set X is empty")
        self._feasible_x = result.x

        for j in range(inst.n):
            unit = [0] * inst.n
            unit[j] = 1
            if self._solve(self._program(unit)).status == LpStatus.UNBOUNDED:
                raise UnboundedInstance(f"variable x{j + 1} is unbounded over X")
        logger.debug(f"Instance validated: p={inst.p}, n={inst.n}, m={inst.m}")

    def _optimize_objective(self, row: Sequence[Fraction]) -> Fraction:
        result = self._solve(self._program(row))
        if result.status == LpStatus.INFEASIBLE:
            raise InfeasibleInstance("the feasible set X is empty")
        if result.status == LpStatus.UNBOUNDED:
            raise UnboundedInstance("an objective is unbounded over X")
        return result.value

    def ideal_point(self) -> Vector:
        """Componentwise maxima y_max of every objective over X."""
        return tuple(self._optimize_objective(row) for row in self.instance.C)

    def objective_minima(self) -> Vector:
        """Componentwise minima y_min of every objective over X."""
        return tuple(-self._optimize_objective([-c for c in row]) for row in self.instance.C)

    def anchor_point(self) -> Vector:
        """The anchor y_hat = y_min - offset, strictly dominated by every outcome."""
        return self.anchor.y_hat

    @property
    def anchor(self) -> AnchorData:
        """Ideal point, minima and anchor point, computed on first access."""
        if self._anchor is None:
            y_max = self.ideal_point()
            y_min = self.objective_minima()
            y_hat = tuple(v - self.anchor_offset for v in y_min)
            self._anchor = AnchorData(y_hat=y_hat, y_max=y_max, y_min=y_min)
            logger.debug(f"Anchor data: y_hat={y_hat}, y_max={y_max}")
        return self._anchor

    def feasible_outcome(self) -> Vector:
        """Cx0 for some feasible x0."""
        if self._feasible_x is None:
            result = self._solve(self._program([0] * self.instance.n))
            if result.status != LpStatus.OPTIMAL:
                raise InfeasibleInstance("the feasible set X is empty")
            self._feasible_x = result.x
        return self.instance.outcome(self._feasible_x)

    def interior_point(self, target: TargetSet = TargetSet.YSQUARE) -> Vector:
        """
        A point strictly inside the target.

        For Y^box this is the midpoint of y_hat and a feasible outcome; for Y^<=
        the anchor point itself already lies in the interior.
        """
        y_hat = self.anchor.y_hat
        if target == TargetSet.YLEQ:
            return y_hat
        return tuple((a + b) / 2 for a, b in zip(y_hat, self.feasible_outcome()))

    def member(self, z: Sequence, target: TargetSet) -> bool:
        """
        Whether ``z`` lies in the target polyhedron.

        Y^<= membership asks for x in X with Cx >= z; Y^box additionally
        requires z >= y_hat, which is checked without an LP.
        """
        z = tuple(Fraction(v) for v in z)
        if target == TargetSet.YSQUARE and any(a < b for a, b in zip(z, self.anchor.y_hat)):
            return False
        ge = list(zip(self.instance.C, z))
        return self._solve(self._program([0] * self.instance.n, ge=ge)).optimal

    def efficiency_check(self, y: Sequence) -> bool:
        """
        Whether no outcome dominates ``y``.

        Solves max sum(Cx - y) subject to Cx >= y over X; ``y`` is efficient
        exactly when the optimum is zero.

        Raises:
            NotInOutcomeSet: If ``y`` is not dominated by any outcome
        """
        y = tuple(Fraction(v) for v in y)
        objective = [sum(column) for column in zip(*self.instance.C)]
        result = self._solve(self._program(objective, ge=list(zip(self.instance.C, y))))
        if result.status != LpStatus.OPTIMAL:
            raise NotInOutcomeSet(f"{y} is not dominated by any outcome")
        return result.value == sum(y, ZERO)

    def boundary_point(
        self,
        v: Sequence,
        ybar: Sequence,
        target: TargetSet,
    ) -> tuple[Vector, Fraction]:
        """
        Where the segment from ``ybar`` to ``v`` leaves the target.

        One LP over (x, lambda): maximize lambda subject to x in X,
        Cx >= ybar + lambda (v - ybar) and 0 <= lambda <= 1 (plus the box
        rows for Y^box).

        Args:
            v: Point outside the target
            ybar: Point strictly inside the target
            target: Y^<= or Y^box

        Returns:
            (x, lambda*) with x = ybar + lambda*(v - ybar), 0 < lambda* < 1

        Raises:
            BadSegment: If ybar is not interior or v is not outside
        """
        v = tuple(Fraction(c) for c in v)
        ybar = tuple(Fraction(c) for c in ybar)
        n = self.instance.n
        direction = tuple(a - b for a, b in zip(v, ybar))

        ge = [(list(row) + [-d], yb) for row, d, yb in zip(self.instance.C, direction, ybar)]
        if target == TargetSet.YSQUARE:
            for i, (d, yb, yh) in enumerate(zip(direction, ybar, self.anchor.y_hat)):
                ge.append(([0] * n + [d], yh - yb))
        le = [([0] * n + [1], 1)]

        result = self._solve(self._program([0] * n + [1], ge=ge, le=le, extra_columns=1))
        if result.status != LpStatus.OPTIMAL:
            raise BadSegment(f"{ybar} does not lie in {target.value}")
        lam = result.value
        if lam >= 1:
            raise BadSegment(f"{v} already lies in {target.value}")
        if lam <= 0:
            raise BadSegment(f"{ybar} lies on the boundary of {target.value}, not inside")

        x = tuple(yb + lam * d for yb, d in zip(ybar, direction))
        return x, lam

    def cut_halfspace(self, x: Sequence, target: TargetSet) -> HHalfspace:
        """
        A half-space containing the target with ``x`` on its bounding hyperplane.

        Solves max t subject to x in X and Cx >= x + t·1. At a boundary point
        of Y^<= the optimum is 0 and the dual multipliers w >= 0 of the
        objective rows (sum w >= 1) give Y^<= ⊆ {y | w·y <= w·x}. For Y^box a
        point that is interior to Y^<= can only sit on a box face y_i >= y_hat_i.

        Returns:
            Homogeneous half-space (-w, w·x) or (e_i, -y_hat_i)

        Raises:
            NotOnBoundary: If ``x`` is interior to the target or outside it
        """
        x = tuple(Fraction(c) for c in x)
        inst = self.instance
        ge = [(list(row) + [-1], xi) for row, xi in zip(inst.C, x)]
        result = self._solve(self._program([0] * inst.n + [1], ge=ge, extra_columns=1))
        if result.status != LpStatus.OPTIMAL:
            raise NotOnBoundary(f"{x} does not lie in Y^<=")

        if result.value == 0:
            w = tuple(-y for y in result.dual[inst.m:])
            return halfspace_leq(w, _dot(w, x))

        if target == TargetSet.YSQUARE:
            y_hat = self.anchor.y_hat
            if any(a < b for a, b in zip(x, y_hat)):
                raise NotOnBoundary(f"{x} lies below the anchor point")
            for i, (a, b) in enumerate(zip(x, y_hat)):
                if a == b:
                    unit = [0] * self.p
                    unit[i] = 1
                    return halfspace_geq(unit, b)
        raise NotOnBoundary(f"{x} is interior to {target.value}")

    def halfspace_contains_target(self, h: HHalfspace, target: TargetSet) -> bool:
        """
        Whether every point of the target satisfies ``h`` (in lifted coordinates).

        Minimizes a·y + c over y = Cx - s with x in X, s >= 0 (and y >= y_hat
        for Y^box) in a single LP.
        """
        inst = self.instance
        a = [Fraction(v) for v in h.coeffs[:-1]]
        c = Fraction(h.coeffs[-1])
        p = inst.p
        objective = [-_dot(a, column) for column in zip(*inst.C)] + list(a)
        ge = []
        if target == TargetSet.YSQUARE:
            for i, (row, yh) in enumerate(zip(inst.C, self.anchor.y_hat)):
                slack = [0] * p
                slack[i] = -1
                ge.append((list(row) + slack, yh))
        result = self._solve(self._program(objective, ge=ge, extra_columns=p))
        if result.status != LpStatus.OPTIMAL:
            return False
        return c - result.value >= 0


def efficient_filter(vertices: Iterable[Sequence], y_hat: Sequence) -> tuple[Vector, ...]:
    """
    Vertices of Y^box that strictly dominate the anchor point.

    These are exactly the efficient vertices: every coordinate differs from
    the anchor.
    """
    y_hat = tuple(Fraction(v) for v in y_hat)
    kept = {
        tuple(Fraction(c) for c in v)
        for v in vertices
        if all(Fraction(c) > yh for c, yh in zip(v, y_hat))
    }
    return tuple(sorted(kept))


__all__ = ["OutcomeSpace", "efficient_filter"]
