"""Tests for outcome-space operations."""

import random
from fractions import Fraction

import pytest

from core.exceptions import BadSegment, InfeasibleInstance, NotInOutcomeSet, NotOnBoundary, UnboundedInstance
from core.lp import LpSolver
from core.models import MolpInstance, TargetSet
from core.molp import OutcomeSpace, efficient_filter
from core.oracle import enumerate_outcome_vertices
from core.projective import HHalfspace, halfspace_leq, lift, side

H = Fraction(1, 2)


@pytest.mark.unit
class TestValidation:
    """Tests for the nonempty and bounded checks."""

    def test_valid_instance(self, simplex2_space):
        assert simplex2_space.p == 2

    def test_infeasible(self):
        instance = MolpInstance.from_rows([[1, 0]], [[1, 1]], [-1])
        with pytest.raises(InfeasibleInstance):
            OutcomeSpace(instance)

    def test_unbounded(self):
        instance = MolpInstance.from_rows([[1, 0]], [[1, -1]], [0])
        with pytest.raises(UnboundedInstance):
            OutcomeSpace(instance)

    def test_validation_can_be_skipped(self):
        instance = MolpInstance.from_rows([[1, 0]], [[1, -1]], [0])
        OutcomeSpace(instance, validate=False)


@pytest.mark.unit
class TestAnchor:
    """Tests for the ideal point and the anchor point."""

    def test_ideal_point(self, simplex2_space):
        assert simplex2_space.ideal_point() == (1, 1)

    def test_objective_minima(self, simplex2_space):
        assert simplex2_space.objective_minima() == (0, 0)

    def test_anchor_point(self, simplex2_space):
        assert simplex2_space.anchor_point() == (-1, -1)

    def test_anchor_offset(self, simplex2):
        assert OutcomeSpace(simplex2, anchor_offset=3).anchor_point() == (-3, -3)

    def test_anchor_computed_once(self, simplex2):
        solver = LpSolver()
        space = OutcomeSpace(simplex2, solver)
        space.anchor_point()
        after_first = solver.solves
        space.anchor_point()
        assert solver.solves == after_first

    def test_interior_points(self, simplex2_space):
        assert simplex2_space.interior_point(TargetSet.YLEQ) == (-1, -1)
        ybar = simplex2_space.interior_point(TargetSet.YSQUARE)
        assert all(a > b for a, b in zip(ybar, simplex2_space.anchor_point()))
        assert simplex2_space.member(ybar, TargetSet.YSQUARE)


@pytest.mark.unit
class TestMembership:
    """Tests for Y^<= and Y^box membership."""

    @pytest.mark.parametrize(
        "z,target,expected",
        [
            ((H, H), TargetSet.YLEQ, True),
            ((1, 1), TargetSet.YLEQ, False),
            ((-2, 0), TargetSet.YSQUARE, False),
            ((-2, 0), TargetSet.YLEQ, True),
            ((-1, -1), TargetSet.YSQUARE, True),
            ((1, 0), TargetSet.YSQUARE, True),
        ],
    )
    def test_member(self, simplex2_space, z, target, expected):
        assert simplex2_space.member(z, target) is expected


@pytest.mark.unit
class TestEfficiency:
    """Tests for the efficiency check."""

    @pytest.mark.parametrize("y,expected", [((1, 0), True), ((0, 0), False), ((H, H), True), ((0, 1), True)])
    def test_efficiency_check(self, simplex2_space, y, expected):
        assert simplex2_space.efficiency_check(y) is expected

    def test_not_in_outcome_set(self, simplex2_space):
        with pytest.raises(NotInOutcomeSet):
            simplex2_space.efficiency_check((1, 1))

    def test_efficient_filter(self):
        vertices = [(1, 0), (0, 1), (-1, 1), (-1, -1), (1, -1), (1, 0)]
        assert efficient_filter(vertices, (-1, -1)) == ((0, 1), (1, 0))


@pytest.mark.unit
class TestBoundaryPoint:
    """Tests for the exact boundary line search."""

    def test_diagonal(self, simplex2_space):
        x, lam = simplex2_space.boundary_point((1, 1), (-1, -1), TargetSet.YLEQ)
        assert x == (H, H)
        assert lam == Fraction(3, 4)

    def test_box_corner(self, simplex2_space):
        x, lam = simplex2_space.boundary_point((2, -1), (-1, -1), TargetSet.YLEQ)
        assert x == (1, -1)
        assert lam == Fraction(2, 3)

    def test_box_target_stops_at_anchor_face(self, simplex2_space):
        ybar = simplex2_space.interior_point(TargetSet.YSQUARE)
        x, lam = simplex2_space.boundary_point((ybar[0], -5), ybar, TargetSet.YSQUARE)
        assert x[1] == -1
        assert 0 < lam < 1

    def test_endpoint_inside_rejected(self, simplex2_space):
        with pytest.raises(BadSegment):
            simplex2_space.boundary_point((0, 0), (-1, -1), TargetSet.YLEQ)

    def test_start_outside_rejected(self, simplex2_space):
        with pytest.raises(BadSegment):
            simplex2_space.boundary_point((3, 3), (2, 2), TargetSet.YLEQ)

    def test_start_on_boundary_rejected(self, simplex2_space):
        with pytest.raises(BadSegment):
            simplex2_space.boundary_point((1, 1), (H, H), TargetSet.YLEQ)


@pytest.mark.unit
class TestCutHalfspace:
    """Tests for supporting half-space generation."""

    def test_efficient_face(self, simplex2_space):
        h = simplex2_space.cut_halfspace((H, H), TargetSet.YLEQ)
        assert h.coeffs == (-1, -1, 1)

    def test_box_corner(self, simplex2_space):
        h = simplex2_space.cut_halfspace((1, -1), TargetSet.YSQUARE)
        assert h.coeffs in {(-1, 0, 1), (0, 1, 1)}
        assert side(h, lift((1, -1))) == 0

    def test_anchor_face(self, simplex2_space):
        h = simplex2_space.cut_halfspace((0, -1), TargetSet.YSQUARE)
        assert h.coeffs == (0, 1, 1)

    def test_interior_rejected(self, simplex2_space):
        with pytest.raises(NotOnBoundary):
            simplex2_space.cut_halfspace((0, 0), TargetSet.YLEQ)

    def test_outside_rejected(self, simplex2_space):
        with pytest.raises(NotOnBoundary):
            simplex2_space.cut_halfspace((1, 1), TargetSet.YLEQ)

    @pytest.mark.parametrize("x", [(H, H), (1, 0), (0, 1), (1, -3), (Fraction(1, 4), Fraction(3, 4))])
    def test_contains_target(self, simplex2_space, x):
        h = simplex2_space.cut_halfspace(x, TargetSet.YLEQ)
        assert simplex2_space.halfspace_contains_target(h, TargetSet.YLEQ)
        assert side(h, lift(x)) == 0

    def test_random_instance_cuts_contain_target(self, random_instance):
        instance = random_instance(7, p=3, n=5, m=2)
        space = OutcomeSpace(instance)
        ybar = space.interior_point(TargetSet.YSQUARE)
        outside = tuple(v + 10 for v in space.ideal_point())
        x, _ = space.boundary_point(outside, ybar, TargetSet.YSQUARE)
        h = space.cut_halfspace(x, TargetSet.YSQUARE)
        assert space.halfspace_contains_target(h, TargetSet.YSQUARE)
        assert side(h, lift(outside)) < 0


@pytest.mark.unit
class TestHalfspaceContainsTarget:
    """Tests for the containment check."""

    def test_too_tight(self, simplex2_space):
        assert not simplex2_space.halfspace_contains_target(halfspace_leq((1, 1), H), TargetSet.YLEQ)

    def test_lower_bound_fails_for_yleq(self, simplex2_space):
        h = HHalfspace((0, 1, 1))
        assert not simplex2_space.halfspace_contains_target(h, TargetSet.YLEQ)
        assert simplex2_space.halfspace_contains_target(h, TargetSet.YSQUARE)


@pytest.mark.integration
class TestDominatedSet:
    """Y^<= is the outcome polytope plus the nonpositive orthant."""

    @pytest.mark.parametrize("seed", range(4))
    def test_outcome_plus_nonpositive_is_member(self, random_instance, seed):
        instance = random_instance(seed, p=3, n=5, m=2)
        space = OutcomeSpace(instance, LpSolver())
        rng = random.Random(seed)
        for y in enumerate_outcome_vertices(instance):
            z = [-Fraction(rng.randint(0, 12), rng.randint(1, 4)) for _ in y]
            assert space.member([a + b for a, b in zip(y, z)], TargetSet.YLEQ)

    @pytest.mark.parametrize("seed", range(4))
    def test_ray_past_ideal_point_leaves(self, random_instance, seed):
        """Moving one coordinate beyond its maximum leaves Y^<=, whatever the others do."""
        instance = random_instance(seed, p=3, n=5, m=2)
        space = OutcomeSpace(instance, LpSolver())
        y_max = space.ideal_point()
        rng = random.Random(seed)
        for y in enumerate_outcome_vertices(instance):
            i = rng.randrange(len(y))
            assert space.member(y, TargetSet.YLEQ)
            beyond = list(y)
            beyond[i] = y_max[i] + Fraction(1, rng.randint(1, 5))
            assert not space.member(beyond, TargetSet.YLEQ)
            beyond = [c - 100 if j != i else c for j, c in enumerate(beyond)]
            assert not space.member(beyond, TargetSet.YLEQ)
