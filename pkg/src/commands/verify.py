"""
Verify command.

Implements `outerproj verify`: run both outer approximation drivers and the
brute-force oracle on each instance and check that

- all three report the same efficient extreme outcomes,
- the final projective polytope has exactly p vertices that are not
  efficient, namely the fixed points at infinity,
- the final Euclidean polytope has at least 2^p - 1 such vertices,
- the union of the V(S) sets equals the Euclidean polytope's vertex set.
"""

import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from commands.solve import solve_instance
from constants import ALGORITHMS, EXIT_OK
from core.config import SolverConfig
from core.exceptions import VerificationMismatch
from core.lp import LpSolver
from core.models import MolpInstance, SolveResult
from core.oracle import vsquare_vertices
from core.outer import infinite_directions
from core.persistence import load_instance
from core.projective import project
from outputs.base import InstanceReport
from outputs.runtime_report import RuntimeReportGenerator
from utils.formatting import color_enabled, colorize, format_duration, format_number, format_vector_set, render_table
from utils.logging_helpers import log_info_header

logger = logging.getLogger(__name__)


def run_all(instance: MolpInstance, config: SolverConfig) -> dict[str, SolveResult]:
    """Run every algorithm, side by side on a thread pool."""
    with ThreadPoolExecutor(max_workers=config.max_workers) as executor:
        futures = {name: executor.submit(solve_instance, instance, name, config) for name in ALGORITHMS}
        return {name: futures[name].result() for name in ALGORITHMS}


def check_results(
    instance: MolpInstance,
    results: dict[str, SolveResult],
    config: SolverConfig,
) -> list[str]:
    """
    Compare the results of one instance.

    Returns:
        Human-readable descriptions of every failed check (empty if all pass)
    """
    failures = []
    p = instance.p
    reference = results["oracle"].efficient_extreme_outcomes
    for name in ("projective", "euclidean"):
        outcomes = results[name].efficient_extreme_outcomes
        if outcomes != reference:
            failures.append(
                f"{name} outcomes {format_vector_set(outcomes)} differ from oracle {format_vector_set(reference)}"
            )

    projective = results["projective"]
    if projective.stats.final_non_efficient_count != p:
        failures.append(
            f"projective polytope has {projective.stats.final_non_efficient_count} non-efficient vertices, expected {p}"
        )
    if frozenset(projective.final_polytope.infinite_vertices) != infinite_directions(p):
        failures.append("projective polytope's vertices at infinity are not -e_1..-e_p")

    euclidean = results["euclidean"]
    if euclidean.stats.final_non_efficient_count < 2**p - 1:
        failures.append(
            f"Euclidean polytope has {euclidean.stats.final_non_efficient_count} non-efficient vertices, "
            f"expected at least {2**p - 1}"
        )

    box_vertices = frozenset(project(v) for v in euclidean.final_polytope.vertices)
    decomposed = vsquare_vertices(
        instance, config.oracle_budget, LpSolver(config.verify_certificates), config.anchor_offset
    )
    if decomposed != box_vertices:
        failures.append(
            f"V(S) union {format_vector_set(decomposed)} differs from Y^box vertices {format_vector_set(box_vertices)}"
        )
    return failures


def comparison_table(results: dict[str, SolveResult], passed: bool) -> str:
    """Plain-text table of the headline numbers of each algorithm."""
    headers = ["algorithm", "outcomes", "iterations", "LP solves", "vertices", "non-efficient", "time", "status"]
    rows = []
    for name, result in results.items():
        stats = result.stats
        is_driver = result.final_polytope is not None
        rows.append([
            name,
            str(len(result.efficient_extreme_outcomes)),
            str(stats.iterations) if is_driver else "-",
            format_number(stats.lp_solves),
            str(stats.final_vertex_count) if is_driver else "-",
            str(stats.final_non_efficient_count) if is_driver else "-",
            format_duration(stats.wall_time),
            colorize("ok" if passed else "MISMATCH", passed, color_enabled(sys.stdout.isatty())),
        ])
    return render_table(headers, rows)


def verify_instance(
    instance: MolpInstance,
    name: str,
    config: Optional[SolverConfig] = None,
) -> tuple[InstanceReport, list[str]]:
    """Run and cross-check every algorithm on one instance."""
    config = config or SolverConfig()
    results = run_all(instance, config)
    failures = check_results(instance, results, config)
    return InstanceReport(name, instance.p, results, passed=not failures), failures


def verify_cmd(
    input_paths: Sequence[Path],
    config: Optional[SolverConfig] = None,
    report_path: Optional[Path] = None,
) -> int:
    """
    Verify one or more instance files.

    Returns:
        EXIT_OK when every check passes

    Raises:
        VerificationMismatch: Listing every failed check
    """
    config = config or SolverConfig()
    reports = []
    all_failures = []
    for path in input_paths:
        path = Path(path)
        instance = load_instance(path)
        log_info_header(f"Verifying {path.name} (p={instance.p}, n={instance.n}, m={instance.m})", logger)
        report, failures = verify_instance(instance, path.stem, config)
        print(comparison_table(report.results, report.passed))
        for result_name in ("projective", "euclidean"):
            counts = report.results[result_name].stats.vertex_counts
            logger.info(f"{result_name} vertex counts per iteration: {list(counts)}")
        reports.append(report)
        all_failures.extend(f"{path.name}: {failure}" for failure in failures)

    if report_path:
        RuntimeReportGenerator().generate(reports, report_path)
    if all_failures:
        raise VerificationMismatch(all_failures)
    return EXIT_OK
