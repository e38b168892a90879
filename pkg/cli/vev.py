#!/usr/bin/env python3
"""
VEV CLI - Print the vacuum expectation value <vac|x|vac> of an expression.

Usage:
    python -m cli.vev --N 3 --n 1 --expr "b[1,2]"
    python -m cli.vev --N 4 --n 2 --expr "c[1]*c[2]^3"
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
from clifford.element import Element
from lang.evaluator import Evaluator
from lang.parser import parse_text
from scalars.cyclotomic import Cyclo
from states.state import State, StateOp, apply_stateop, ground, vev

HELP = "print the vacuum expectation value of an expression"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--expr", required=True, help="Operator expression")
    add_size_args(parser)
    add_backend_arg(parser)
    add_output_args(parser)


def expectation(text: str, evaluator: Evaluator) -> Cyclo:
    value = evaluator.visit(parse_text(text))
    if isinstance(value, Cyclo):
        return value
    if isinstance(value, Element):
        return vev(value)
    if isinstance(value, StateOp):
        value = apply_stateop(value, ground(evaluator.ctx, evaluator.n))
    # a state s gives <vac|s>
    return value.coefficient((0,) * evaluator.n)


def run(args: argparse.Namespace) -> int:
    config = command_config(args)
    ctx = config.context()
    value = expectation(args.expr, Evaluator(ctx, config.n))
    write_output(format_value(value, ctx, config.output_format), config.output_path)
    return EXIT_PASS


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["vev"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
