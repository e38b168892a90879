#!/usr/bin/env python3
"""
Normal Form CLI - Evaluate an expression and print its normal form.

Usage:
    python -m cli.nf --N 3 --n 1 --expr "c[2]*c[1]"
    python -m cli.nf --N 3 --n 2 --expr "b[1,2]*b[2,1]"
    python -m cli.nf --N 4 --n 2 --expr "b[2,3]^2" --format json

Generators are written c[i], braids b[k,l], the vacuum marker |vac>.
Products need an explicit '*'.
"""

import argparse
import sys

from errors import EXIT_PASS
from cli.common import (
    add_backend_arg,
    add_output_args,
    add_size_args,
    command_config,
    format_value,
    write_output,
)
from lang.evaluator import evaluate_text

HELP = "print the normal form of an expression"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--expr", required=True, help="Expression to evaluate")
    add_size_args(parser)
    add_backend_arg(parser)
    add_output_args(parser)


def run(args: argparse.Namespace) -> int:
    config = command_config(args)
    ctx = config.context()
    value = evaluate_text(args.expr, config, ctx)
    write_output(format_value(value, ctx, config.output_format), config.output_path)
    return EXIT_PASS


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["nf"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
