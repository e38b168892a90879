#!/usr/bin/env python3
"""
Report Builder - Text and JSON reports for verify and gauss runs.

Text reports are rendered from the templates/ directory; JSON reports dump
the same data with stable key order.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from errors import PreconditionError
from reports.gauss_chart import create_gauss_chart
from reports.suites import SuiteReport
from scalars.gauss import GaussReport

logger = logging.getLogger(__name__)

FORMATS = ("text", "json")


def _params(params) -> str:
    return ",".join(str(p) for p in params) if params else "-"


class ReportBuilder:
    """
    Builds verify tables and Gauss-sum summaries.

    Text output comes from Jinja2 templates, so the layout can be adjusted
    without touching the suites.
    """

    def __init__(self, template_dir: Optional[str] = None):
        """
        Initialize report builder.

        Args:
            template_dir: Directory containing Jinja2 templates
                (uses default templates directory if not provided)
        """
        if template_dir is None:
            template_dir = Path(__file__).parent.parent / "templates"

        self.template_dir = Path(template_dir)
        self.env = Environment(
            loader=FileSystemLoader(str(self.template_dir)),
            autoescape=select_autoescape(["html", "xml"]),
            keep_trailing_newline=True,
        )
        self.env.filters["params"] = _params

    @staticmethod
    def _check_format(output_format: str):
        if output_format not in FORMATS:
            raise PreconditionError(f"unknown output format '{output_format}'")

    def build_verify_report(self, report: SuiteReport, output_format: str = "text") -> str:
        """
        Render a verify run.

        Args:
            report: SuiteReport from run_suite
            output_format: 'text' (table) or 'json'

        Returns:
            Report text ending in a newline
        """
        self._check_format(output_format)
        if output_format == "json":
            return json.dumps(report.to_dict(), indent=2) + "\n"

        template = self.env.get_template("verify_report.txt")
        return template.render(
            report=report,
            results=report.results,
            tally=report.tally(),
            failures=len(report.failures),
        )

    def build_gauss_report(
        self,
        reports: List[GaussReport],
        output_format: str = "text",
        chart_path: Optional[str] = None,
    ) -> Dict[str, Any]:
        """
        Render gauss_diagnostics results, optionally with a chart.

        Args:
            reports: One GaussReport per N
            output_format: 'text' or 'json'
            chart_path: Where to save the magnitude chart (no chart if omitted)

        Returns:
            Dict with 'text' and 'chart' (path or None) keys
        """
        self._check_format(output_format)
        chart = create_gauss_chart(reports, output_path=chart_path) if chart_path else None

        if output_format == "json":
            data = [r.to_dict() for r in reports]
            text = json.dumps(data[0] if len(data) == 1 else data, indent=2) + "\n"
        else:
            text = self.env.get_template("gauss_report.txt").render(reports=reports)

        return {"text": text, "chart": chart}
