"""
Pytest fixtures and configuration for outerproj tests.

Provides shared instances, polytopes and a seeded random-instance factory.
"""

import random
from fractions import Fraction

import pytest

from core.dd import DDPolytope, box_polytope
from core.lp import LpSolver
from core.models import MolpInstance
from core.molp import OutcomeSpace

SIMPLEX2_ROWS = {
    "C": [[1, 0, 0], [0, 1, 0]],
    "A": [[1, 1, 1]],
    "b": [1],
}


def make_random_instance(seed: int, p: int = 2, n: int = 5, m: int = 2) -> MolpInstance:
    """
    Random bounded, feasible instance.

    The first equality row has positive coefficients, which bounds X; the
    right-hand side comes from a nonnegative integer point, which makes X
    nonempty.
    """
    rng = random.Random(seed)
    x0 = [rng.randint(0, 3) for _ in range(n)]
    if not any(x0):
        x0[0] = 1
    A = [[rng.randint(1, 3) for _ in range(n)]]
    for _ in range(m - 1):
        A.append([rng.randint(-2, 2) for _ in range(n)])
    b = [sum(a * x for a, x in zip(row, x0)) for row in A]
    C = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(p)]
    return MolpInstance.from_rows(C, A, b)


@pytest.fixture
def simplex2():
    """max (x1, x2) over the unit simplex in three variables."""
    return MolpInstance.from_rows(**SIMPLEX2_ROWS)


@pytest.fixture
def solver():
    """A certifying LP solver."""
    return LpSolver(verify_certificates=True)


@pytest.fixture
def simplex2_space(simplex2, solver):
    """Outcome space of SIMPLEX2."""
    return OutcomeSpace(simplex2, solver)


@pytest.fixture
def unit_square() -> DDPolytope:
    """[0,1]^2 with its four facets."""
    return box_polytope([0, 0], [1, 1])


@pytest.fixture
def unit_cube() -> DDPolytope:
    """[0,1]^3 with its six facets."""
    return box_polytope([0, 0, 0], [1, 1, 1])


@pytest.fixture
def random_instance():
    """Factory for seeded random bounded instances."""
    return make_random_instance


@pytest.fixture
def half():
    return Fraction(1, 2)
