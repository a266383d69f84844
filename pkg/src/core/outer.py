"""
Outer approximation drivers.

Both drivers start from a simplex containing the target polyhedron and
repeatedly cut off a vertex that lies outside it, until every tested vertex
is a member:

- ``run_euclidean`` approximates the bounded polytope Y^box in ordinary
  coordinates. Its final polytope keeps at least 2^p - 1 vertices that are
  not efficient.
- ``run_projective`` approximates Y^<= closed off at infinity. Only visible
  vertices are ever tested; the p vertices at infinity stay fixed, and they
  are the only vertices of the final polytope that are not efficient.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from core.config import SolverConfig
from core.dd import DDPolytope, cut_with_stats
from core.exceptions import BudgetExceeded, InternalError
from core.lp import LpSolver
from core.models import AnchorData, MolpInstance, RunStats, SolveResult, TargetSet, Vector
from core.molp import OutcomeSpace, efficient_filter
from core.projective import (
    HHalfspace,
    HPoint,
    PointClass,
    classify,
    halfspace_geq,
    halfspace_leq,
    lift,
    project,
    side,
    visible_halfspace,
)

logger = logging.getLogger(__name__)


def _unit(p: int, i: int, scale=1) -> list:
    unit = [0] * p
    unit[i] = scale
    return unit


def initial_simplex_euclidean(instance: MolpInstance, anchor: AnchorData) -> DDPolytope:
    """
    Simplex with corner y_hat containing Y^box.

    Vertices are y_hat and y_hat + alpha·e_i with
    alpha = sum(y_max - y_hat) + 1; the half-spaces are y_i >= y_hat_i and
    sum(y) <= sum(y_hat) + alpha.
    """
    p = anchor.p
    alpha = sum((a - b for a, b in zip(anchor.y_max, anchor.y_hat)), Fraction(0)) + 1
    vertices = [lift(anchor.y_hat)]
    for i in range(p):
        corner = list(anchor.y_hat)
        corner[i] += alpha
        vertices.append(lift(corner))

    halfspaces = [halfspace_geq(_unit(p, i), anchor.y_hat[i]) for i in range(p)]
    halfspaces.append(halfspace_leq([1] * p, sum(anchor.y_hat, Fraction(0)) + alpha))
    logger.debug(f"Initial Euclidean simplex: alpha={alpha}")
    return DDPolytope.build(vertices, halfspaces)


def infinite_directions(p: int) -> frozenset[HPoint]:
    """The points at infinity -e_1, ..., -e_p of projective p-space."""
    return frozenset(HPoint(tuple(_unit(p, i, -1)) + (0,)) for i in range(p))


def initial_simplex_projective(instance: MolpInstance, anchor: AnchorData) -> DDPolytope:
    """
    Projective simplex with one visible vertex y_max containing Y^<=.

    The other p vertices are the points at infinity -e_i. The half-spaces are
    y_i <= y_max_i together with the visible half-space; the witness is
    sum(y) <= (sum(y_max) + 1)·w in homogeneous form.
    """
    p = anchor.p
    vertices = [lift(anchor.y_max), *infinite_directions(p)]
    halfspaces = [halfspace_leq(_unit(p, i), anchor.y_max[i]) for i in range(p)]
    halfspaces.append(visible_halfspace(p))
    witness = halfspace_leq([1] * p, sum(anchor.y_max, Fraction(0)) + 1)
    return DDPolytope.build(vertices, halfspaces, witness)


@dataclass
class _Progress:
    iterations: int = 0
    vertex_counts: list[int] = field(default_factory=list)
    adjacency_checks: int = 0


def _approximate(
    space: OutcomeSpace,
    polytope: DDPolytope,
    target: TargetSet,
    ybar: Vector,
    max_iterations: int,
    selection_seed: Optional[int] = None,
    on_iteration: Optional[Callable[[DDPolytope], None]] = None,
) -> tuple[DDPolytope, _Progress]:
    rng = random.Random(selection_seed) if selection_seed is not None else None
    progress = _Progress()

    while True:
        candidates = list(polytope.visible_vertices)
        if rng is not None:
            rng.shuffle(candidates)
        outside = next((v for v in candidates if not space.member(project(v), target)), None)
        if outside is None:
            return polytope, progress
        if progress.iterations >= max_iterations:
            raise BudgetExceeded("iterations", progress.iterations + 1, max_iterations)

        v = project(outside)
        x, lam = space.boundary_point(v, ybar, target)
        h = space.cut_halfspace(x, target)
        _check_separation(h, v, x)

        polytope, cut_stats = cut_with_stats(polytope, h)
        progress.iterations += 1
        progress.vertex_counts.append(len(polytope.vertices))
        progress.adjacency_checks += cut_stats.adjacency_checks
        logger.debug(
            f"Iteration {progress.iterations}: cut {outside} at lambda={lam} with {h}, "
            f"{len(polytope.vertices)} vertices"
        )
        if on_iteration is not None:
            on_iteration(polytope)


def _check_separation(h: HHalfspace, v: Vector, x: Vector) -> None:
    if side(h, lift(x)) != 0:
        raise InternalError(f"Boundary point {x} is not on its cutting hyperplane {h}")
    if side(h, lift(v)) >= 0:
        raise InternalError(f"Half-space {h} does not cut off {v}")


def _prepare(
    instance: MolpInstance,
    config: Optional[SolverConfig],
    solver: Optional[LpSolver],
) -> tuple[SolverConfig, LpSolver, OutcomeSpace, int]:
    config = config or SolverConfig()
    solver = solver or LpSolver(config.verify_certificates)
    solves_before = solver.solves
    space = OutcomeSpace(instance, solver, anchor_offset=config.anchor_offset)
    return config, solver, space, solves_before


def run_euclidean(
    instance: MolpInstance,
    config: Optional[SolverConfig] = None,
    solver: Optional[LpSolver] = None,
    selection_seed: Optional[int] = None,
) -> SolveResult:
    """
    Approximate Y^box from outside and read off its efficient vertices.

    Args:
        instance: Validated MOLP instance
        config: Solver settings (defaults from constants)
        solver: LP solver; its counter is used for ``lp_solves``
        selection_seed: Shuffle the vertex scan order with this seed

    Raises:
        InvalidInstanceError: If X is empty or unbounded
        BudgetExceeded: If more than ``max_iterations`` cuts are needed
    """
    start = time.perf_counter()
    config, solver, space, solves_before = _prepare(instance, config, solver)
    logger.info(f"Running Euclidean outer approximation (p={instance.p}, n={instance.n})")

    anchor = space.anchor
    ybar = space.interior_point(TargetSet.YSQUARE)
    polytope = initial_simplex_euclidean(instance, anchor)
    polytope, progress = _approximate(
        space, polytope, TargetSet.YSQUARE, ybar, config.max_iterations, selection_seed
    )

    outcomes = efficient_filter((project(v) for v in polytope.vertices), anchor.y_hat)
    result = _result("euclidean", outcomes, polytope, progress, solver.solves - solves_before, start)
    logger.info(f"Euclidean run finished: {result} after {progress.iterations} cuts")
    return result


def run_projective(
    instance: MolpInstance,
    config: Optional[SolverConfig] = None,
    solver: Optional[LpSolver] = None,
    selection_seed: Optional[int] = None,
) -> SolveResult:
    """
    Approximate Y^<= as a projective polytope; its visible vertices are the
    efficient extreme outcomes.

    The vertices at infinity are checked after every cut.

    Raises:
        InvalidInstanceError: If X is empty or unbounded
        BudgetExceeded: If more than ``max_iterations`` cuts are needed
        InternalError: If the vertices at infinity ever change
    """
    start = time.perf_counter()
    config, solver, space, solves_before = _prepare(instance, config, solver)
    logger.info(f"Running projective outer approximation (p={instance.p}, n={instance.n})")

    anchor = space.anchor
    expected = infinite_directions(instance.p)

    def check_infinite_vertices(polytope: DDPolytope) -> None:
        if frozenset(polytope.infinite_vertices) != expected:
            raise InternalError(f"Vertices at infinity changed to {polytope.infinite_vertices}")
        if polytope.vertices_of_class(PointClass.INVISIBLE):
            raise InternalError("Projective polytope gained an invisible vertex")

    polytope = initial_simplex_projective(instance, anchor)
    polytope, progress = _approximate(
        space,
        polytope,
        TargetSet.YLEQ,
        space.interior_point(TargetSet.YLEQ),
        config.max_iterations,
        selection_seed,
        on_iteration=check_infinite_vertices,
    )

    outcomes = tuple(sorted(project(v) for v in polytope.vertices if classify(v) == PointClass.VISIBLE))
    result = _result("projective", outcomes, polytope, progress, solver.solves - solves_before, start)
    logger.info(f"Projective run finished: {result} after {progress.iterations} cuts")
    return result


def _result(
    algorithm: str,
    outcomes: tuple[Vector, ...],
    polytope: DDPolytope,
    progress: _Progress,
    lp_solves: int,
    start: float,
) -> SolveResult:
    stats = RunStats(
        iterations=progress.iterations,
        lp_solves=lp_solves,
        vertex_counts=tuple(progress.vertex_counts),
        final_vertex_count=len(polytope.vertices),
        final_non_efficient_count=len(polytope.vertices) - len(outcomes),
        adjacency_checks=progress.adjacency_checks,
        wall_time=time.perf_counter() - start,
    )
    return SolveResult(algorithm, outcomes, stats, polytope)


__all__ = [
    "initial_simplex_euclidean",
    "initial_simplex_projective",
    "infinite_directions",
    "run_euclidean",
    "run_projective",
]
