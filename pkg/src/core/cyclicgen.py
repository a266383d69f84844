"""
Dual cyclic polytopes as worst-case MOLP instances.

The cyclic polytope on k points of the moment curve t -> (t, t^2, ..., t^d)
has the most facets among d-polytopes with k vertices; its polar, the dual
cyclic polytope, has k facets and the most vertices. Embedding the polar into
the hyperplane y_1 + ... + y_p = 1 of p = d + 1 dimensional objective space
gives an instance whose outcome vertices are all efficient.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

from core.dd import DDPolytope, box_polytope, enumerate_from_halfspaces
from core.exceptions import InternalError, InvalidSpec
from core.lp import LinearProgram, LpSolver
from core.models import MolpInstance, Vector
from core.projective import HHalfspace, dot, halfspace_leq, project
from utils.exact import rank

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DualCyclicSpec:
    """
    Parameters of a dual cyclic polytope.

    Attributes:
        d: Dimension, at least 2
        k: Number of facets, more than d
    """

    d: int
    k: int

    def validate(self) -> "DualCyclicSpec":
        """
        Raises:
            InvalidSpec: Unless 2 <= d < k
        """
        if isinstance(self.d, bool) or not isinstance(self.d, int) or not isinstance(self.k, int):
            raise InvalidSpec(f"dimension and facet count must be integers, got d={self.d!r}, k={self.k!r}")
        if self.d < 2:
            raise InvalidSpec(f"dimension must be at least 2, got {self.d}")
        if self.k <= self.d:
            raise InvalidSpec(f"facet count must exceed the dimension, got d={self.d}, k={self.k}")
        return self

    @property
    def expected_vertices(self) -> int:
        return count_dual_cyclic_vertices(self.d, self.k)


def count_dual_cyclic_vertices(d: int, k: int) -> int:
    """
    Vertex count of the (d, k) dual cyclic polytope.

    Examples:
        >>> count_dual_cyclic_vertices(2, 5)
        5
        >>> count_dual_cyclic_vertices(4, 8)
        20
    """
    DualCyclicSpec(d, k).validate()
    return comb(k - (d + 1) // 2, k - d) + comb(k - (d + 2) // 2, k - d)


def moment_points(d: int, k: int) -> list[Vector]:
    """Points (t, ..., t^d) for t = 1..k, translated so their centroid is the origin."""
    raw = [tuple(Fraction(t**j) for j in range(1, d + 1)) for t in range(1, k + 1)]
    centroid = tuple(sum(column, Fraction(0)) / k for column in zip(*raw))
    return [tuple(a - c for a, c in zip(point, centroid)) for point in raw]


def polar_halfspaces(points: list[Vector]) -> list[HHalfspace]:
    """Half-spaces v·y <= 1, one per point v; their intersection is the polar."""
    return [halfspace_leq(v, 1) for v in points]


def polar_bounds(points: list[Vector], solver: Optional[LpSolver] = None) -> tuple[Vector, Vector]:
    """
    Exact per-coordinate minima and maxima over the polar of ``points``.

    Free variables are split as y = u - w with u, w >= 0.
    """
    solver = solver or LpSolver()
    d = len(points[0])
    le = [(list(v) + [-a for a in v], 1) for v in points]
    lower, upper = [], []
    for j in range(d):
        objective = [0] * (2 * d)
        objective[j] = 1
        objective[d + j] = -1
        upper.append(solver.solve(LinearProgram.build(objective, le=le)).value)
        lower.append(-solver.solve(LinearProgram.build([-c for c in objective], le=le)).value)
    return tuple(lower), tuple(upper)


def _facet_count(polytope: DDPolytope) -> int:
    count = 0
    for h in polytope.halfspaces:
        on = [v.coords for v in polytope.vertices if dot(h, v) == 0]
        if on and rank(on) == polytope.dimension:
            count += 1
    return count


def dual_cyclic_polytope(d: int, k: int, solver: Optional[LpSolver] = None) -> DDPolytope:
    """
    The (d, k) dual cyclic polytope with exactly its k facet half-spaces.

    Vertices are computed by cutting a bounding box with every polar
    half-space; the box faces are then dropped.

    Raises:
        InvalidSpec: Unless 2 <= d < k
        InternalError: If the vertex or facet count disagrees with the formula
    """
    spec = DualCyclicSpec(d, k).validate()
    points = moment_points(d, k)
    halfspaces = polar_halfspaces(points)
    lower, upper = polar_bounds(points, solver)
    seed = box_polytope([v - 1 for v in lower], [v + 1 for v in upper])

    enumerated = enumerate_from_halfspaces(halfspaces, seed)
    polytope = DDPolytope.build(enumerated.vertices, halfspaces)

    if len(polytope.vertices) != spec.expected_vertices:
        raise InternalError(
            f"Dual cyclic ({d},{k}) has {len(polytope.vertices)} vertices, expected {spec.expected_vertices}"
        )
    facets = _facet_count(polytope)
    if facets != k:
        raise InternalError(f"Dual cyclic ({d},{k}) has {facets} facets, expected {k}")

    logger.debug(f"Dual cyclic polytope ({d},{k}): {len(polytope.vertices)} vertices")
    return polytope


def embed_point(z: Vector, p: int) -> Vector:
    """
    Image of z in the hyperplane sum(y) = 1: y = (1/p, ..., 1/p) + B z, where
    B has columns e_i - e_p.
    """
    base = Fraction(1, p)
    head = [base + zi for zi in z]
    return tuple(head + [base - sum(z, Fraction(0))])


def embed_as_molp(polytope: DDPolytope, p: Optional[int] = None) -> MolpInstance:
    """
    MOLP whose outcome set is ``polytope`` placed in the hyperplane sum(y) = 1.

    X is the standard simplex {x >= 0 | sum(x) = 1} with one variable per
    vertex, and column j of C is the embedded vertex j.

    Raises:
        InvalidSpec: If the polytope has dimension below 2 or p != d + 1
    """
    d = polytope.dimension
    if d < 2:
        raise InvalidSpec(f"embedding needs dimension at least 2, got {d}")
    p = d + 1 if p is None else p
    if p != d + 1:
        raise InvalidSpec(f"a {d}-polytope embeds into p = {d + 1} objectives, not {p}")

    columns = [embed_point(project(v), p) for v in polytope.vertices]
    n = len(columns)
    C = [[column[i] for column in columns] for i in range(p)]
    return MolpInstance.from_rows(C, [[1] * n], [1])


def dual_cyclic_instance(d: int, k: int, solver: Optional[LpSolver] = None) -> MolpInstance:
    """Embedded (d, k) dual cyclic instance with p = d + 1 objectives."""
    return embed_as_molp(dual_cyclic_polytope(d, k, solver))


__all__ = [
    "DualCyclicSpec",
    "count_dual_cyclic_vertices",
    "moment_points",
    "polar_halfspaces",
    "polar_bounds",
    "dual_cyclic_polytope",
    "embed_point",
    "embed_as_molp",
    "dual_cyclic_instance",
]
