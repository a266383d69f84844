"""
Brute-force ground truth for small instances.

Nothing here is clever: outcome vertices come from enumerating every basic
solution of X, efficiency is checked one point at a time, and the vertex set
of Y^box is assembled subset by subset from the objective sub-problems. The
outer approximation drivers are tested against these results.
"""

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Optional, Sequence

from constants import DEFAULT_ANCHOR_OFFSET, DEFAULT_MAX_WORKERS, DEFAULT_ORACLE_BUDGET
from core.exceptions import BudgetExceeded, InternalError
from core.lp import LinearProgram, LpSolver
from core.models import MolpInstance, Vector
from core.molp import OutcomeSpace
from core.projective import HHalfspace, HPoint, side
from utils.exact import independent_rows, nullspace_vector, solve_square

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VSetIndex:
    """
    A subset S of the objective indices, stored 0-based and sorted.

    Subsets order by size first, then lexicographically.
    """

    members: tuple[int, ...]

    def __lt__(self, other: "VSetIndex") -> bool:
        return (len(self.members), self.members) < (len(other.members), other.members)

    @classmethod
    def all_subsets(cls, p: int) -> list["VSetIndex"]:
        """Every subset of {0, ..., p-1} in canonical order."""
        return [
            cls(members)
            for size in range(p + 1)
            for members in itertools.combinations(range(p), size)
        ]

    def complement(self, p: int) -> tuple[int, ...]:
        return tuple(i for i in range(p) if i not in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return "{" + ",".join(str(i + 1) for i in self.members) + "}"


def _check_budget(what: str, size: int, budget: int) -> None:
    if size > budget:
        raise BudgetExceeded(what, size, budget)


def basic_outcomes(instance: MolpInstance, budget: int = DEFAULT_ORACLE_BUDGET) -> set[Vector]:
    """
    Images Cx of every basic feasible solution x of X.

    Redundant equality rows are dropped first, so the basis size is rank(A).

    Raises:
        BudgetExceeded: If there are more than ``budget`` column subsets
    """
    rows, rhs = independent_rows(instance.A, instance.b)
    n = instance.n
    r = len(rows)
    _check_budget("column subsets", comb(n, r), budget)

    outcomes = set()
    for columns in itertools.combinations(range(n), r):
        square = [[row[j] for j in columns] for row in rows]
        solution = solve_square(square, rhs) if r else []
        if solution is None or any(v < 0 for v in solution):
            continue
        x = [Fraction(0)] * n
        for j, value in zip(columns, solution):
            x[j] = value
        outcomes.add(instance.outcome(x))
    logger.debug(f"{len(outcomes)} distinct basic outcomes from {comb(n, r)} column subsets")
    return outcomes


def hull_vertices(points: Iterable[Vector], solver: Optional[LpSolver] = None) -> set[Vector]:
    """
    The points that are vertices of the convex hull of ``points``.

    A point is dropped when an LP writes it as a convex combination of the
    others.
    """
    solver = solver or LpSolver()
    candidates = sorted(set(points))
    vertices = set()
    for idx, q in enumerate(candidates):
        others = candidates[:idx] + candidates[idx + 1 :]
        if not others:
            vertices.add(q)
            continue
        a = [[o[i] for o in others] for i in range(len(q))]
        a.append([1] * len(others))
        lp = LinearProgram.build([0] * len(others), a=a, b=list(q) + [1])
        if not solver.solve(lp).optimal:
            vertices.add(q)
    return vertices


def enumerate_outcome_vertices(
    instance: MolpInstance,
    budget: int = DEFAULT_ORACLE_BUDGET,
    solver: Optional[LpSolver] = None,
) -> set[Vector]:
    """
    Vertex set of the outcome polytope {Cx | x in X}.

    Raises:
        BudgetExceeded: If basic-solution enumeration exceeds ``budget``
    """
    return hull_vertices(basic_outcomes(instance, budget), solver)


def brute_efficient_extremes(
    instance: MolpInstance,
    budget: int = DEFAULT_ORACLE_BUDGET,
    solver: Optional[LpSolver] = None,
    validate: bool = True,
) -> tuple[Vector, ...]:
    """
    Efficient extreme outcomes by definition: outcome vertices no outcome dominates.

    Returns:
        Sorted tuple of outcome vectors

    Raises:
        InvalidInstanceError: If X is empty or unbounded (when validating)
        BudgetExceeded: If enumeration exceeds ``budget``
    """
    solver = solver or LpSolver()
    space = OutcomeSpace(instance, solver, validate=validate)
    vertices = enumerate_outcome_vertices(instance, budget, solver)
    return tuple(sorted(y for y in vertices if space.efficiency_check(y)))


def vset(
    instance: MolpInstance,
    subset: VSetIndex,
    y_hat: Sequence,
    budget: int = DEFAULT_ORACLE_BUDGET,
    solver: Optional[LpSolver] = None,
) -> frozenset[Vector]:
    """
    Efficient extreme outcomes of the sub-problem on the objectives in
    ``subset``, padded with y_hat in every other coordinate.

    The empty subset gives {y_hat}.
    """
    y_hat = tuple(Fraction(v) for v in y_hat)
    if not subset.members:
        return frozenset({y_hat})

    sub = instance.restrict_objectives(subset.members)
    points = set()
    for reduced in brute_efficient_extremes(sub, budget, solver, validate=False):
        full = list(y_hat)
        for i, value in zip(subset.members, reduced):
            full[i] = value
        points.add(tuple(full))
    return frozenset(points)


def vset_decomposition(
    instance: MolpInstance,
    budget: int = DEFAULT_ORACLE_BUDGET,
    solver: Optional[LpSolver] = None,
    anchor_offset: int = DEFAULT_ANCHOR_OFFSET,
    max_workers: int = DEFAULT_MAX_WORKERS,
) -> dict[VSetIndex, frozenset[Vector]]:
    """
    V(S) for every subset S of the objectives, in canonical subset order.

    Sub-problems are independent and run on a thread pool.

    Raises:
        BudgetExceeded: If 2^p exceeds ``budget``
        InternalError: If two of the sets intersect
    """
    p = instance.p
    _check_budget("objective subsets", 2**p, budget)
    solver = solver or LpSolver()
    y_hat = OutcomeSpace(instance, solver, anchor_offset=anchor_offset).anchor_point()

    subsets = VSetIndex.all_subsets(p)
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        futures = {s: executor.submit(vset, instance, s, y_hat, budget, solver) for s in subsets}
        sets = {s: futures[s].result() for s in subsets}

    for first, second in itertools.combinations(subsets, 2):
        shared = sets[first] & sets[second]
        if shared:
            raise InternalError(f"V({first}) and V({second}) share {sorted(shared)}")
    return sets


def vsquare_vertices(
    instance: MolpInstance,
    budget: int = DEFAULT_ORACLE_BUDGET,
    solver: Optional[LpSolver] = None,
    anchor_offset: int = DEFAULT_ANCHOR_OFFSET,
) -> frozenset[Vector]:
    """Vertex set of Y^box as the disjoint union of all V(S)."""
    decomposition = vset_decomposition(instance, budget, solver, anchor_offset)
    return frozenset().union(*decomposition.values())


def brute_vertices_from_halfspaces(
    halfspaces: Sequence[HHalfspace],
    witness: HHalfspace,
    budget: int = DEFAULT_ORACLE_BUDGET,
) -> frozenset[HPoint]:
    """
    Vertices of a projective polytope by trying every d-subset of bounding
    hyperplanes.

    Each subset with a one-dimensional null space gives two candidate points
    (a generator and its opposite); a candidate is a vertex when it satisfies
    every half-space and lies strictly inside the witness.

    Raises:
        BudgetExceeded: If there are more than ``budget`` subsets
    """
    d = witness.dimension
    _check_budget("hyperplane subsets", comb(len(halfspaces), d), budget)
    vertices = set()
    for group in itertools.combinations(halfspaces, d):
        generator = nullspace_vector([h.coeffs for h in group])
        if generator is None:
            continue
        for sign in (1, -1):
            point = HPoint(tuple(sign * v for v in generator))
            if side(witness, point) > 0 and all(side(h, point) >= 0 for h in halfspaces):
                vertices.add(point)
    return frozenset(vertices)


__all__ = [
    "VSetIndex",
    "basic_outcomes",
    "hull_vertices",
    "enumerate_outcome_vertices",
    "brute_efficient_extremes",
    "vset",
    "vset_decomposition",
    "vsquare_vertices",
    "brute_vertices_from_halfspaces",
]
