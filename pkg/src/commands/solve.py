"""
Solve command.

Implements `outerproj solve`: read an instance file, run one algorithm and
write the efficient extreme outcomes (and optionally the run statistics).
"""

import logging
import sys
import time
from pathlib import Path
from typing import Optional

from constants import ALGORITHMS, EXIT_OK
from core.config import SolverConfig
from core.exceptions import ValidationException
from core.lp import LpSolver
from core.models import MolpInstance, RunStats, SolveResult
from core.oracle import brute_efficient_extremes
from core.outer import run_euclidean, run_projective
from core.persistence import dump_yaml, load_instance, result_to_dict, save_result, save_stats

logger = logging.getLogger(__name__)


def run_oracle(instance: MolpInstance, config: Optional[SolverConfig] = None) -> SolveResult:
    """Brute-force efficient extreme outcomes, packaged like a driver result."""
    config = config or SolverConfig()
    solver = LpSolver(config.verify_certificates)
    start = time.perf_counter()
    outcomes = brute_efficient_extremes(instance, config.oracle_budget, solver)
    stats = RunStats(lp_solves=solver.solves, wall_time=time.perf_counter() - start)
    return SolveResult("oracle", outcomes, stats)


def solve_instance(
    instance: MolpInstance,
    algorithm: str,
    config: Optional[SolverConfig] = None,
) -> SolveResult:
    """
    Run ``algorithm`` on ``instance``.

    Raises:
        ValidationException: If the algorithm name is unknown
    """
    config = config or SolverConfig()
    if algorithm == "projective":
        return run_projective(instance, config)
    if algorithm == "euclidean":
        return run_euclidean(instance, config)
    if algorithm == "oracle":
        return run_oracle(instance, config)
    raise ValidationException(f"unknown algorithm {algorithm!r}, expected one of {', '.join(ALGORITHMS)}", "algorithm")


def solve_cmd(
    input_path: Path,
    algorithm: str,
    output_path: Optional[Path] = None,
    stats_path: Optional[Path] = None,
    config: Optional[SolverConfig] = None,
) -> int:
    """
    Solve an instance file.

    The result goes to ``output_path``, or to stdout when no path is given.

    Returns:
        EXIT_OK; failures are raised and mapped to exit codes by the CLI
    """
    instance = load_instance(input_path)
    logger.info(f"Solving {input_path} with the {algorithm} algorithm")
    result = solve_instance(instance, algorithm, config)

    if output_path:
        save_result(result, output_path)
        logger.info(f"Wrote {len(result.efficient_extreme_outcomes)} outcomes to {output_path}")
    else:
        sys.stdout.write(dump_yaml(result_to_dict(result)))
    if stats_path:
        save_stats(result.stats, stats_path)
    return EXIT_OK
