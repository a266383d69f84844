"""
Runtime-structure workbook.

Two sheets: ``summary`` has one row per instance and algorithm (iterations,
LP solves, final and non-efficient vertex counts, adjacency checks, wall
time); ``iterations`` lists the vertex count after every cut for the two
outer approximation drivers side by side, which shows how the Euclidean
polytopes outgrow the projective ones.
"""

import itertools
import logging
from pathlib import Path

import xlsxwriter

from core.exceptions import OutputException
from outputs.base import InstanceReport, OutputGenerator
from outputs.xlsx_formats import OutputFormatter

logger = logging.getLogger(__name__)

SUMMARY_HEADERS = [
    "Instance",
    "p",
    "Algorithm",
    "Efficient extreme outcomes",
    "Iterations",
    "LP solves",
    "Final vertices",
    "Non-efficient vertices",
    "Adjacency checks",
    "Wall time (ms)",
    "Verified",
]

DRIVERS = ("projective", "euclidean")


class RuntimeReportGenerator(OutputGenerator):
    """Writes the runtime-structure workbook for ``verify --report``."""

    def supports_format(self) -> str:
        return "xlsx"

    def generate(self, reports: list[InstanceReport], output_path: Path) -> None:
        """
        Write the workbook.

        Raises:
            OutputException: If there is nothing to report
        """
        if not reports:
            raise OutputException("xlsx", "No verified instances to report")

        logger.info(f"Generating runtime report: {output_path}")
        workbook = xlsxwriter.Workbook(str(output_path))
        formatter = OutputFormatter(workbook)

        self._write_summary(workbook.add_worksheet("summary"), formatter, reports)
        self._write_iterations(workbook.add_worksheet("iterations"), formatter, reports)

        workbook.close()
        logger.info(f"Runtime report generated: {output_path}")

    def _write_summary(self, worksheet, formatter: OutputFormatter, reports: list[InstanceReport]) -> None:
        worksheet.write_row(0, 0, SUMMARY_HEADERS, formatter.get("header"))
        worksheet.freeze_panes(1, 0)
        row = 1
        for report in reports:
            for algorithm, result in report.results.items():
                stats = result.stats
                worksheet.write(row, 0, report.name, formatter.get("label"))
                worksheet.write_number(row, 1, report.p, formatter.get("count"))
                worksheet.write(row, 2, algorithm, formatter.get("body"))
                values = [
                    len(result.efficient_extreme_outcomes),
                    stats.iterations,
                    stats.lp_solves,
                    stats.final_vertex_count,
                    stats.final_non_efficient_count,
                    stats.adjacency_checks,
                ]
                for offset, value in enumerate(values):
                    worksheet.write_number(row, 3 + offset, value, formatter.get("count"))
                worksheet.write_number(row, 9, stats.wall_time * 1000, formatter.get("ms"))
                worksheet.write(
                    row, 10, "yes" if report.passed else "no",
                    formatter.get("pass" if report.passed else "fail"),
                )
                row += 1
        worksheet.autofit()

    def _write_iterations(self, worksheet, formatter: OutputFormatter, reports: list[InstanceReport]) -> None:
        headers = ["Instance", "Iteration"] + [f"{name} vertices" for name in DRIVERS]
        worksheet.write_row(0, 0, headers, formatter.get("header"))
        worksheet.freeze_panes(1, 0)
        row = 1
        for report in reports:
            series = [
                report.results[name].stats.vertex_counts if name in report.results else ()
                for name in DRIVERS
            ]
            for iteration, counts in enumerate(itertools.zip_longest(*series), 1):
                worksheet.write(row, 0, report.name, formatter.get("label"))
                worksheet.write_number(row, 1, iteration, formatter.get("count"))
                for offset, count in enumerate(counts):
                    if count is None:
                        worksheet.write_blank(row, 2 + offset, None, formatter.get("body"))
                    else:
                        worksheet.write_number(row, 2 + offset, count, formatter.get("count"))
                row += 1
        worksheet.autofit()


__all__ = ["RuntimeReportGenerator", "SUMMARY_HEADERS"]
