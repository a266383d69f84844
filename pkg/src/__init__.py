"""
outerproj - exact outer approximation for multiobjective linear programs

Computes the efficient extreme outcomes of max Cx over {x >= 0 | Ax = b} in
exact rational arithmetic, either in ordinary coordinates or with a projective
polytope whose only non-efficient vertices are p fixed points at infinity.
"""

__version__ = "0.3.0"

from core.models import MolpInstance, RunStats, SolveResult, TargetSet

__all__ = [
    "MolpInstance",
    "RunStats",
    "SolveResult",
    "TargetSet",
]
