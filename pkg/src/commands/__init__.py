"""
Command implementations for the outerproj CLI.

Provides the solve, generate and verify subcommands.
"""

from commands.generate import generate_cmd
from commands.solve import solve_cmd
from commands.verify import verify_cmd

__all__ = ["solve_cmd", "generate_cmd", "verify_cmd"]
