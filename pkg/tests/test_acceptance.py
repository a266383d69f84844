"""
End-to-end checks over a suite of instances.

Every instance is solved by both drivers and the brute-force oracle, and the
structural claims about the final polytopes are checked exactly.
"""

import random
from fractions import Fraction

import pytest

from commands.verify import check_results, run_all, verify_instance
from core.config import SolverConfig
from core.cyclicgen import count_dual_cyclic_vertices, dual_cyclic_instance, dual_cyclic_polytope
from core.dd import DDPolytope, box_polytope, cut, cut_with_stats
from core.models import MolpInstance
from core.molp import OutcomeSpace, efficient_filter
from core.oracle import brute_vertices_from_halfspaces, vset_decomposition
from core.outer import infinite_directions
from core.projective import halfspace_geq, halfspace_leq, lift

from tests.conftest import SIMPLEX2_ROWS, make_random_instance

DUAL_CYCLIC_SPECS = [(2, 5), (2, 6), (3, 6), (3, 7)]
RANDOM_SPECS = [
    (0, 2, 4, 1),
    (1, 2, 6, 2),
    (2, 3, 5, 2),
    (3, 3, 6, 3),
    (4, 3, 7, 2),
    (5, 2, 7, 3),
]


def suite():
    instances = [("simplex2", MolpInstance.from_rows(**SIMPLEX2_ROWS))]
    instances += [(f"dual-cyclic-{d}-{k}", dual_cyclic_instance(d, k)) for d, k in DUAL_CYCLIC_SPECS]
    instances += [
        (f"random-{seed}", make_random_instance(seed, p=p, n=n, m=m)) for seed, p, n, m in RANDOM_SPECS
    ]
    return instances


SUITE = suite()


@pytest.mark.slow
@pytest.mark.integration
class TestCrossAlgorithm:
    """All algorithms agree and the final polytopes have the expected structure."""

    @pytest.mark.parametrize("name,instance", SUITE, ids=[name for name, _ in SUITE])
    def test_instance(self, name, instance):
        config = SolverConfig()
        results = run_all(instance, config)
        assert check_results(instance, results, config) == []

        p = instance.p
        reference = results["oracle"].efficient_extreme_outcomes
        projective = results["projective"]
        euclidean = results["euclidean"]

        assert projective.efficient_extreme_outcomes == reference
        assert euclidean.efficient_extreme_outcomes == reference
        assert frozenset(projective.final_polytope.infinite_vertices) == infinite_directions(p)
        assert len(projective.final_polytope.visible_vertices) == len(reference)
        assert euclidean.stats.final_non_efficient_count >= 2**p - 1

    def test_simplex2_box_count_is_tight(self):
        report, failures = verify_instance(MolpInstance.from_rows(**SIMPLEX2_ROWS), "simplex2")
        assert failures == []
        assert report.results["euclidean"].stats.final_non_efficient_count == 3

    @pytest.mark.parametrize("d,k", [(2, 5), (3, 6)])
    def test_dual_cyclic_contrast(self, d, k):
        """The projective polytope carries p extra vertices, the Euclidean one at least 2^p - 1."""
        report, failures = verify_instance(dual_cyclic_instance(d, k), f"dc-{d}-{k}")
        assert failures == []
        p = d + 1
        assert report.results["projective"].stats.final_non_efficient_count == p
        assert report.results["euclidean"].stats.final_non_efficient_count >= 2**p - 1
        for name in ("projective", "euclidean"):
            stats = report.results[name].stats
            assert len(stats.vertex_counts) == stats.iterations


@pytest.mark.slow
class TestVSetPartition:
    """V(S) sets partition the vertex set of Y^box."""

    @pytest.mark.parametrize("name,instance", [item for item in SUITE if item[1].p <= 3])
    def test_partition(self, name, instance):
        sets = vset_decomposition(instance)
        union = frozenset().union(*sets.values())
        assert sum(len(s) for s in sets.values()) == len(union)

        space = OutcomeSpace(instance)
        y_hat = space.anchor_point()
        full = max(sets, key=len)
        proper = union - sets[full]
        assert len(proper) >= 2**instance.p - 1
        assert efficient_filter(union, y_hat) == tuple(sorted(sets[full]))


class TestDualCyclicCounts:
    """Generated polytopes have the closed-form vertex counts."""

    @pytest.mark.parametrize("d,k,expected", [(2, 5, 5), (3, 6, 8), (3, 8, 12), (4, 8, 20)])
    def test_counts(self, d, k, expected):
        assert count_dual_cyclic_vertices(d, k) == expected
        assert len(dual_cyclic_polytope(d, k).vertices) == expected


def simplex_seed(d: int) -> DDPolytope:
    """The simplex conv(0, 3e_1, ..., 3e_d) with its d + 1 facets."""
    vertices = [lift([0] * d)]
    halfspaces = []
    for i in range(d):
        unit = [0] * d
        unit[i] = 1
        vertices.append(lift([3 * u for u in unit]))
        halfspaces.append(halfspace_geq(unit, 0))
    halfspaces.append(halfspace_leq([1] * d, 3))
    return DDPolytope.build(vertices, halfspaces)


class TestRandomCutOracle:
    """Single cuts of small polytopes against hyperplane-subset enumeration."""

    @staticmethod
    def random_cut(rng: random.Random, d: int, centre: Fraction):
        """A half-space a·y <= c keeping (centre, ..., centre) strictly inside."""
        normal = [rng.randint(-4, 4) for _ in range(d)]
        if not any(normal):
            normal[-1] = 1
        return halfspace_leq(normal, centre * sum(normal) + Fraction(rng.randint(1, 8), 4))

    def seed_polytope(self, seed: int, rng: random.Random) -> tuple[DDPolytope, Fraction]:
        """Simplices in dimension 2-4, boxes in dimension 2-3, or a simplex cut once already."""
        kind = seed % 3
        if kind == 1:
            d = 2 + seed % 2
            return box_polytope([0] * d, [3] * d), Fraction(3, 2)
        d = 2 + seed % 3
        centre = Fraction(3, d + 1)
        polytope = simplex_seed(d)
        if kind == 2:
            polytope = cut(polytope, self.random_cut(rng, d, centre))
        return polytope, centre

    @pytest.mark.parametrize("seed", range(60))
    def test_cut_matches_oracle(self, seed):
        rng = random.Random(seed)
        seed_polytope, centre = self.seed_polytope(seed, rng)
        h = self.random_cut(rng, seed_polytope.dimension, centre)

        result = cut(seed_polytope, h)
        expected = brute_vertices_from_halfspaces(seed_polytope.halfspaces + (h,), seed_polytope.witness)
        assert set(result.vertices) == expected

    def test_boxes_reject_non_adjacent_pairs(self):
        """Cutting off a box corner pairs it with vertices it shares no edge with."""
        rejected = 0
        for seed in range(1, 60, 3):
            rng = random.Random(seed)
            seed_polytope, centre = self.seed_polytope(seed, rng)
            _, stats = cut_with_stats(seed_polytope, self.random_cut(rng, seed_polytope.dimension, centre))
            rejected += stats.pairs - stats.crossings
        assert rejected > 0
