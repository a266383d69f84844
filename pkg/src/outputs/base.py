"""
Base output generator interface.

Defines the contract that report generators implement.
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path

from core.models import SolveResult


@dataclass(frozen=True)
class InstanceReport:
    """
    Every algorithm's result on one instance.

    Attributes:
        name: Instance label (usually the file stem)
        p: Number of objectives
        results: Algorithm name to its result
        passed: Whether verification succeeded
    """

    name: str
    p: int
    results: dict[str, SolveResult] = field(default_factory=dict)
    passed: bool = True


class OutputGenerator(ABC):
    """Abstract base class for report generators."""

    @abstractmethod
    def generate(self, reports: list[InstanceReport], output_path: Path) -> None:
        """
        Generate a report.

        Args:
            reports: One entry per verified instance
            output_path: Where to write the output file
        """
        pass

    @abstractmethod
    def supports_format(self) -> str:
        """Format identifier (e.g. "xlsx")."""
        pass
