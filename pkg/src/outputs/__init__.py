"""Report generators."""

from outputs.base import InstanceReport, OutputGenerator
from outputs.runtime_report import RuntimeReportGenerator

__all__ = [
    "InstanceReport",
    "OutputGenerator",
    "RuntimeReportGenerator",
]
