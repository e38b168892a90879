#!/usr/bin/env python3
"""
State CLI - Apply a braid word (or any operator expression) to the ground state.

Usage:
    python -m cli.state --N 3 --n 2 --word "b[3,4]*b[2,3]"
    python -m cli.state --N 2 --n 2 --word "b[2,3]*b[3,4]*b[1,2]*b[2,3]"
    python -m cli.state --N 3 --n 2 --word "E[1]*b[1,2]" --format json

The word is read left to right as written and applied right to left:
"b[3,4]*b[2,3]" applies b[2,3] first. A trailing |vac> is optional.
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
from states.state import State, StateOp, apply_element, apply_stateop, ground

HELP = "apply a word to |vac> and print the resulting state"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--word", required=True, help="Braid word or operator expression")
    add_size_args(parser)
    add_backend_arg(parser)
    add_output_args(parser)


def word_state(text: str, evaluator: Evaluator) -> State:
    """Evaluate text and apply the result to the ground state unless it already is a state."""
    value = evaluator.visit(parse_text(text))
    if isinstance(value, State):
        return value
    omega = ground(evaluator.ctx, evaluator.n)
    if isinstance(value, StateOp):
        return apply_stateop(value, omega)
    if isinstance(value, Element):
        return apply_element(value, omega)
    return value * omega


def run(args: argparse.Namespace) -> int:
    config = command_config(args)
    ctx = config.context()
    state = word_state(args.word, Evaluator(ctx, config.n))
    write_output(format_value(state, ctx, config.output_format), config.output_path)
    return EXIT_PASS


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["state"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
