#!/usr/bin/env python3
"""
Verify CLI - Run check families and print a pass/fail table.

Usage:
    python -m cli.verify --N 3 --n 3                     # every family
    python -m cli.verify --N 4 --n 2 --suite ybe         # one family
    python -m cli.verify --N 3 --n 2 --format json -o report.json

Exit status is 0 only when every requested check passes.
"""

import argparse
import logging
import sys

from errors import EXIT_CHECK_FAILURE, EXIT_PASS
from cli.common import add_backend_arg, add_output_args, add_size_args, command_config, write_output
from reports.report_builder import ReportBuilder
from reports.suites import SUITES, run_suite

logger = logging.getLogger(__name__)

HELP = "run verification families and print a pass/fail table"


def add_arguments(parser: argparse.ArgumentParser):
    add_size_args(parser)
    parser.add_argument("--suite", choices=SUITES, default="all", help="Check family (default: all)")
    add_backend_arg(parser)
    parser.add_argument("--workers", type=int, help="Worker threads (default: GCA_WORKERS or 1)")
    add_output_args(parser)


def run(args: argparse.Namespace) -> int:
    config = command_config(args)
    ctx = config.context()
    report = run_suite(ctx, config.n, suite=args.suite, workers=args.workers)
    write_output(ReportBuilder().build_verify_report(report, config.output_format), config.output_path)

    if report.passed:
        return EXIT_PASS
    for failure in report.failures:
        logger.warning(f"FAIL {failure.family}/{failure.check} {failure.params} {failure.detail}".rstrip())
    return EXIT_CHECK_FAILURE


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["verify"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
