#!/usr/bin/env python3
"""
GCA CLI - Generalized Clifford algebra workbench.

Commands:
    verify   run verification families and print a pass/fail table
    nf       print the normal form of an expression
    state    apply a word to |vac> and print the resulting state
    vev      print the vacuum expectation value of an expression
    gauss    print Gauss-sum diagnostics
    render   render a braid word or state expression as SVG or TikZ
    config   show configuration status

Examples:
    python gca_cli.py verify --N 3 --n 3 --suite all
    python gca_cli.py nf --expr "c[2]*c[1]" --N 3 --n 1
    python gca_cli.py state --word "b[3,4]*b[2,3]" --N 3 --n 2
    python gca_cli.py gauss --N 2
    python gca_cli.py render --word "b[1,2]*b[2,3]" -o word.svg

Exit status: 0 pass, 1 check failure, 2 usage or parse error, 3 internal error.
Errors are written to stderr as one JSON object. GCA_BACKEND overrides --backend.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from errors import EXIT_INTERNAL, EXIT_USAGE, GCAError
from cli import config_status, gauss, nf, render, state, verify, vev
from cli.common import ArgumentParser, setup_logging

logger = logging.getLogger(__name__)

COMMANDS = {
    "verify": verify,
    "nf": nf,
    "state": state,
    "vev": vev,
    "gauss": gauss,
    "render": render,
    "config": config_status,
}


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="gca",
        description="Generalized Clifford algebra workbench",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", metavar="command")
    subparsers.required = True

    for name, module in COMMANDS.items():
        sub = subparsers.add_parser(
            name,
            help=module.HELP,
            description=module.__doc__,
            formatter_class=argparse.RawDescriptionHelpFormatter,
        )
        module.add_arguments(sub)
        sub.set_defaults(handler=module.run)

    return parser


def _report_error(data: dict):
    sys.stderr.write(json.dumps(data) + "\n")


def cli_run(argv: Optional[List[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name (sys.argv[1:] if omitted)

    Returns:
        Exit status: 0 pass, 1 check failure, 2 usage/parse error, 3 internal
    """
    try:
        args = build_parser().parse_args(argv)
    except GCAError as e:
        _report_error(e.to_dict())
        return e.exit_code
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.verbose)

    try:
        return args.handler(args)
    except GCAError as e:
        logger.debug(f"{args.command} failed: {e.kind}: {e.message}")
        _report_error(e.to_dict())
        return e.exit_code
    except OSError as e:
        _report_error({"error": "io", "message": str(e)})
        return EXIT_USAGE
    except Exception as e:
        logger.exception(f"Internal error in {args.command}")
        _report_error({"error": "internal", "message": f"{type(e).__name__}: {e}"})
        return EXIT_INTERNAL


def main():
    sys.exit(cli_run())


if __name__ == "__main__":
    main()
