"""
Double description engine for (projective) polytopes.

A polytope is held in two representations at once: its vertex list and a list
of half-spaces whose intersection it is, plus the vertex/half-space incidence
stored as one integer bitset per vertex. Intersecting with a new half-space
partitions the vertices into S+, S0 and S-, keeps S+ and S0, and adds the
crossing point of every adjacent pair (u in S+, v in S-). Adjacency uses the
combinatorial test: u and v are adjacent iff no third vertex lies on every
bounding hyperplane that contains both.

Everything is expressed in signed homogeneous coordinates, so the same code
handles Euclidean polytopes (all vertices visible) and projective polytopes
with vertices at infinity. Every polytope carries a witness half-space whose
interior contains all of its vertices.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from core.exceptions import EmptyResult, InternalError, NotCrossing
from core.projective import (
    HHalfspace,
    HPoint,
    PointClass,
    classify,
    dot,
    halfspace_geq,
    halfspace_leq,
    lift,
    side,
    visible_halfspace,
)

logger = logging.getLogger(__name__)


def _incidence_bits(vertex: HPoint, halfspaces: Sequence[HHalfspace]) -> int:
    bits = 0
    for idx, h in enumerate(halfspaces):
        if dot(h, vertex) == 0:
            bits |= 1 << idx
    return bits


@dataclass(frozen=True)
class DDPolytope:
    """
    Vertex and half-space representations of a projective polytope.

    Build instances with ``DDPolytope.build`` so that vertices are deduplicated
    and sorted, incidence is computed and the invariants are checked.

    Attributes:
        vertices: Canonical vertices in lexicographic order
        halfspaces: Half-spaces whose intersection is the polytope
        witness: Half-space containing every vertex strictly in its interior
        incidence: Per vertex, a bitset of the half-spaces it lies on
    """

    vertices: tuple[HPoint, ...]
    halfspaces: tuple[HHalfspace, ...]
    witness: HHalfspace
    incidence: tuple[int, ...] = field(default=(), compare=False)

    @classmethod
    def build(
        cls,
        vertices: Iterable[HPoint],
        halfspaces: Iterable[HHalfspace],
        witness: Optional[HHalfspace] = None,
    ) -> "DDPolytope":
        """
        Assemble a polytope from both representations.

        Args:
            vertices: Vertex set (duplicates allowed)
            halfspaces: H-representation
            witness: Strictly containing half-space; defaults to the visible
                half-space, which only works when every vertex is visible

        Raises:
            InternalError: If a vertex violates a half-space or the witness
        """
        verts = tuple(sorted(set(vertices)))
        hs = tuple(halfspaces)
        if not verts:
            raise EmptyResult("A polytope needs at least one vertex")
        if witness is None:
            witness = visible_halfspace(verts[0].dimension)
        for v in verts:
            if side(witness, v) <= 0:
                raise InternalError(f"Vertex {v} is not strictly inside witness {witness}")
            for h in hs:
                if side(h, v) < 0:
                    raise InternalError(f"Vertex {v} violates half-space {h}")
        return cls(verts, hs, witness, tuple(_incidence_bits(v, hs) for v in verts))

    @property
    def dimension(self) -> int:
        """Dimension of the ambient projective space."""
        return self.vertices[0].dimension

    def incident(self, index: int) -> frozenset[int]:
        """Indices of the half-spaces whose boundary contains vertex ``index``."""
        bits = self.incidence[index]
        return frozenset(i for i in range(len(self.halfspaces)) if bits >> i & 1)

    def vertices_of_class(self, point_class: PointClass) -> tuple[HPoint, ...]:
        return tuple(v for v in self.vertices if classify(v) == point_class)

    @property
    def visible_vertices(self) -> tuple[HPoint, ...]:
        return self.vertices_of_class(PointClass.VISIBLE)

    @property
    def infinite_vertices(self) -> tuple[HPoint, ...]:
        return self.vertices_of_class(PointClass.INFINITE)


@dataclass(frozen=True)
class CutStats:
    """
    Work done by one cut.

    Attributes:
        positive: |S+|, vertices strictly inside the new half-space
        zero: |S0|, vertices on its boundary
        negative: |S-|, vertices cut off
        pairs: Candidate (S+, S-) pairs examined
        adjacency_checks: Third-vertex incidence comparisons made
        crossings: Distinct crossing points generated
    """

    positive: int = 0
    zero: int = 0
    negative: int = 0
    pairs: int = 0
    adjacency_checks: int = 0
    crossings: int = 0


def crossing_point(u: HPoint, v: HPoint, h: HHalfspace) -> HPoint:
    """
    Point where the segment [u, v] meets the bounding hyperplane of ``h``.

    Computed as (h·u)·v - (h·v)·u, a positive combination of u and v whose
    dot product with h cancels exactly.

    Raises:
        NotCrossing: Unless u is strictly inside h and v strictly outside
    """
    hu = dot(h, u)
    hv = dot(h, v)
    if hu <= 0 or hv >= 0:
        raise NotCrossing(f"{u} (h·u={hu}) and {v} (h·v={hv}) do not straddle {h}")
    return HPoint(tuple(hu * b - hv * a for a, b in zip(u.coords, v.coords)))


def _adjacent_bits(incidence: Sequence[int], i: int, j: int) -> tuple[bool, int]:
    common = incidence[i] & incidence[j]
    checks = 0
    for z, bits in enumerate(incidence):
        if z == i or z == j:
            continue
        checks += 1
        if bits & common == common:
            return False, checks
    return True, checks


def adjacent(polytope: DDPolytope, i: int, j: int) -> bool:
    """
    Combinatorial adjacency test for vertices ``i`` and ``j``.

    Raises:
        IndexError: If an index is out of range or i == j
    """
    count = len(polytope.vertices)
    if not (0 <= i < count and 0 <= j < count):
        raise IndexError(f"Vertex indices {i}, {j} out of range for {count} vertices")
    if i == j:
        raise IndexError(f"Adjacency needs two distinct vertices, got {i} twice")
    return _adjacent_bits(polytope.incidence, i, j)[0]


def cut_with_stats(polytope: DDPolytope, h: HHalfspace) -> tuple[DDPolytope, CutStats]:
    """
    Intersect ``polytope`` with ``h`` and report the work done.

    Raises:
        EmptyResult: If every vertex lies strictly outside h
        InternalError: If a new vertex leaves the witness half-space
    """
    signs = [side(h, v) for v in polytope.vertices]
    positive = [i for i, s in enumerate(signs) if s > 0]
    zero = [i for i, s in enumerate(signs) if s == 0]
    negative = [i for i, s in enumerate(signs) if s < 0]

    if not positive and not zero:
        raise EmptyResult(f"Half-space {h} removes every vertex")

    halfspaces = polytope.halfspaces if h in polytope.halfspaces else polytope.halfspaces + (h,)
    if not negative:
        stats = CutStats(len(positive), len(zero), 0)
        return DDPolytope.build(polytope.vertices, halfspaces, polytope.witness), stats

    crossings = set()
    pairs = 0
    checks = 0
    for i in positive:
        for j in negative:
            pairs += 1
            is_adjacent, used = _adjacent_bits(polytope.incidence, i, j)
            checks += used
            if is_adjacent:
                crossings.add(crossing_point(polytope.vertices[i], polytope.vertices[j], h))

    kept = [polytope.vertices[i] for i in positive + zero]
    for point in crossings:
        if side(polytope.witness, point) <= 0:
            raise InternalError(f"Crossing point {point} left witness half-space {polytope.witness}")

    stats = CutStats(len(positive), len(zero), len(negative), pairs, checks, len(crossings))
    logger.debug(
        f"Cut {h}: |S+|={stats.positive} |S0|={stats.zero} |S-|={stats.negative}, "
        f"{stats.pairs} pairs, {stats.adjacency_checks} checks, {stats.crossings} crossings"
    )
    return DDPolytope.build(kept + list(crossings), halfspaces, polytope.witness), stats


def cut(polytope: DDPolytope, h: HHalfspace) -> DDPolytope:
    """
    Intersect ``polytope`` with the half-space ``h``.

    The result lists ``polytope.halfspaces`` followed by ``h``, unless ``h`` is
    already one of them, in which case the H-list is kept as it is.
    """
    return cut_with_stats(polytope, h)[0]


def enumerate_from_halfspaces(halfspaces: Iterable[HHalfspace], seed: DDPolytope) -> DDPolytope:
    """
    Vertices of seed ∩ all half-spaces, by iterated cuts.

    The seed must contain the target polytope; the resulting vertex set does
    not depend on the order of ``halfspaces``.
    """
    polytope = seed
    for h in halfspaces:
        polytope = cut(polytope, h)
    return polytope


def box_polytope(lower: Sequence, upper: Sequence) -> DDPolytope:
    """
    The Euclidean box [lower, upper] as a DDPolytope.

    Used as a seed for enumeration; every bound must satisfy lower < upper.
    """
    lower = [Fraction(v) for v in lower]
    upper = [Fraction(v) for v in upper]
    d = len(lower)
    vertices = [lift(corner) for corner in itertools.product(*zip(lower, upper))]
    halfspaces = []
    for i in range(d):
        unit = [0] * d
        unit[i] = 1
        halfspaces.append(halfspace_geq(unit, lower[i]))
        halfspaces.append(halfspace_leq(unit, upper[i]))
    return DDPolytope.build(vertices, halfspaces)


__all__ = [
    "DDPolytope",
    "CutStats",
    "crossing_point",
    "adjacent",
    "cut",
    "cut_with_stats",
    "enumerate_from_halfspaces",
    "box_polytope",
]
