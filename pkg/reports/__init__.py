"""
Reports - Verification suites, report rendering and the Gauss-sum chart.

Provides check families for verify runs and text/JSON rendering of their results.
"""

from reports.suites import FAMILIES, SUITES, CheckResult, SuiteReport, run_suite
from reports.gauss_chart import create_gauss_chart
from reports.report_builder import ReportBuilder

__all__ = [
    "FAMILIES",
    "SUITES",
    "CheckResult",
    "SuiteReport",
    "run_suite",
    "create_gauss_chart",
    "ReportBuilder",
]
