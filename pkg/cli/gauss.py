#!/usr/bin/env python3
"""
Gauss CLI - Quadratic Gauss-sum diagnostics.

Usage:
    python -m cli.gauss --N 2                         # one N
    python -m cli.gauss --N 2 --N-max 64              # table for 2..64
    python -m cli.gauss --N 2 --N-max 40 --plot gauss.png

Σ q^(-i^2) vanishes exactly when N ≡ 2 (mod 4) and Σ q^(i-i^2) exactly when
N ≡ 0 (mod 4). The Hansen residual compares Σ q^(i^2) to its closed form.
"""

import argparse
import sys

from errors import EXIT_PASS, UsageError
from cli.common import add_output_args, write_output
from reports.report_builder import ReportBuilder
from scalars.gauss import gauss_table

HELP = "print Gauss-sum diagnostics for one N or a range"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--N", type=int, required=True, help="Qudit dimension (first N of a range)")
    parser.add_argument("--N-max", dest="n_max", type=int, help="Last N of a range (default: --N)")
    parser.add_argument("--plot", help="Save a chart of both normalized sums to this PNG file")
    add_output_args(parser)


def run(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else args.N
    if n_max < args.N:
        raise UsageError(f"--N-max {n_max} is below --N {args.N}")
    reports = gauss_table(n_max, n_min=args.N)
    result = ReportBuilder().build_gauss_report(reports, args.format, chart_path=args.plot)
    write_output(result["text"], args.output)
    return EXIT_PASS


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["gauss"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
