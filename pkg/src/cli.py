"""
Command-line interface for outerproj - exact outer approximation for
multiobjective linear programs.

Subcommands:
- solve: efficient extreme outcomes of an instance file
- generate: write a dual cyclic worst-case instance
- verify: cross-check both drivers against the brute-force oracle
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from constants import (
    ALGORITHMS,
    DEFAULT_CONFIG_PATH,
    EXIT_BUDGET,
    EXIT_INPUT_ERROR,
    EXIT_INVALID_INSTANCE,
    EXIT_MISMATCH,
    GENERATOR_KINDS,
)
from core.config import SolverConfig
from core.exceptions import (
    BudgetExceeded,
    InvalidInstanceError,
    InvalidSpec,
    OutputException,
    OuterProjException,
    PersistenceException,
    ValidationException,
    VerificationMismatch,
)
from utils.logging_helpers import log_error_section, log_warning_section

logger = logging.getLogger(__name__)


def setup_logging(verbose: bool = False):
    """Configure logging."""
    level = logging.DEBUG if verbose else logging.INFO
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(levelname)s - %(message)s",
        datefmt="%H:%M:%S",
    )


def _add_solver_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("solver options")
    group.add_argument("--config", type=Path, default=Path(DEFAULT_CONFIG_PATH), help="Solver settings file.")
    group.add_argument("--budget", type=int, default=None, help="Oracle enumeration budget.")
    group.add_argument("--max-iterations", type=int, default=None, help="Max cuts per outer approximation run.")
    group.add_argument("--max-workers", type=int, default=None, help="Threads for side-by-side runs.")
    group.add_argument("--no-certify", action="store_true", help="Skip exact LP certificate checks.")


def parse_args(args: Optional[list[str]] = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        prog="outerproj",
        description="outerproj - exact outer approximation for multiobjective linear programs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable verbose logging.")
    subparsers = parser.add_subparsers(dest="command", required=True)

    solve = subparsers.add_parser("solve", help="Compute the efficient extreme outcomes of an instance.")
    solve.add_argument("-i", "--input", type=Path, required=True, help="Instance file.")
    solve.add_argument("-a", "--algorithm", choices=ALGORITHMS, default="projective", help="Algorithm to run.")
    solve.add_argument("-o", "--output", type=Path, default=None, help="Result file (stdout if omitted).")
    solve.add_argument("--stats", type=Path, default=None, help="Stats file.")
    _add_solver_options(solve)

    generate = subparsers.add_parser("generate", help="Write a generated instance.")
    generate.add_argument("kind", choices=GENERATOR_KINDS, help="Generator.")
    generate.add_argument("-d", "--dimension", type=int, required=True, help="Polytope dimension d (p = d + 1).")
    generate.add_argument("-k", "--facets", type=int, required=True, help="Facet count k.")
    generate.add_argument("-o", "--output", type=Path, required=True, help="Instance file to write.")

    verify = subparsers.add_parser("verify", help="Cross-check all algorithms on instances.")
    verify.add_argument("-i", "--input", type=Path, nargs="+", required=True, help="Instance file(s).")
    verify.add_argument("--report", type=Path, default=None, help="Write a runtime report workbook (.xlsx).")
    _add_solver_options(verify)

    return parser.parse_args(args)


def load_config(args: argparse.Namespace) -> SolverConfig:
    """Solver settings from the config file with command-line overrides."""
    return SolverConfig.from_yaml(args.config).with_overrides(
        oracle_budget=args.budget,
        max_iterations=args.max_iterations,
        max_workers=args.max_workers,
        verify_certificates=False if args.no_certify else None,
    )


def exit_code_for(error: Exception) -> int:
    """Map an exception to the CLI exit-code taxonomy."""
    if isinstance(error, BudgetExceeded):
        return EXIT_BUDGET
    if isinstance(error, InvalidInstanceError):
        return EXIT_INVALID_INSTANCE
    if isinstance(error, (ValidationException, InvalidSpec, PersistenceException, OutputException)):
        return EXIT_INPUT_ERROR
    return EXIT_MISMATCH


def _run(args: argparse.Namespace) -> int:
    if args.command == "solve":
        from commands.solve import solve_cmd

        return solve_cmd(args.input, args.algorithm, args.output, args.stats, load_config(args))
    if args.command == "generate":
        from commands.generate import generate_cmd

        return generate_cmd(args.kind, args.dimension, args.facets, args.output)

    from commands.verify import verify_cmd

    return verify_cmd(args.input, load_config(args), args.report)


def main(argv: Optional[list[str]] = None) -> int:
    """Run one command and return its exit code."""
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT_ERROR if e.code else 0
    setup_logging(args.verbose)
    if getattr(args, "no_certify", False):
        log_warning_section(
            "Certificate checks disabled",
            ["Optimal LP solutions are used without the exact primal/dual checks."],
            logger,
        )

    try:
        return _run(args)
    except VerificationMismatch as e:
        log_error_section("Verification failed", e.details, logger)
        return EXIT_MISMATCH
    except OuterProjException as e:
        code = exit_code_for(e)
        log_error_section(f"{args.command} failed ({type(e).__name__})", [str(e)], logger)
        return code
    except Exception as e:
        logger.error(f"{args.command} failed: {e}", exc_info=True)
        return EXIT_MISMATCH


def main_dispatch():
    """Console script entry point."""
    sys.exit(main())


if __name__ == "__main__":
    main_dispatch()
