"""Core geometry, linear programming and outer approximation."""

from core.dd import DDPolytope
from core.models import AnchorData, MolpInstance, RunStats, SolveResult, TargetSet
from core.molp import OutcomeSpace
from core.outer import run_euclidean, run_projective

__all__ = [
    "DDPolytope",
    "AnchorData",
    "MolpInstance",
    "RunStats",
    "SolveResult",
    "TargetSet",
    "OutcomeSpace",
    "run_euclidean",
    "run_projective",
]
