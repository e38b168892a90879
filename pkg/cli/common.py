#!/usr/bin/env python3
"""
Common CLI helpers - Shared flags, logging setup and output handling.
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional

from config import BACKENDS, backend_override
from errors import UsageError
from clifford.element import format_element
from lang.evaluator import CommandConfig
from lang.serialization import serialize
from scalars.context import ScalarContext
from scalars.cyclotomic import Cyclo
from states.state import State, format_state

logger = logging.getLogger(__name__)


class ArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting, so errors reach stderr as JSON."""

    def error(self, message):
        raise UsageError(message)


def setup_logging(verbose: bool = False):
    """Log to stderr; stdout carries only command output."""
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )


def add_size_args(parser: argparse.ArgumentParser, n_required: bool = True):
    parser.add_argument("--N", type=int, required=True, help="Qudit dimension (N >= 2)")
    parser.add_argument("--n", type=int, required=n_required, help="Number of qudits (n >= 1)")


def add_backend_arg(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--backend",
        choices=BACKENDS,
        default="exact",
        help="Scalar equality backend (GCA_BACKEND overrides this flag)",
    )


def add_output_args(parser: argparse.ArgumentParser, formats=("text", "json")):
    parser.add_argument("--format", choices=formats, default=formats[0], help="Output format")
    parser.add_argument("-o", "--output", help="Write output to this file instead of stdout")


def resolve_backend(requested: str) -> str:
    override = backend_override()
    if override is not None and override != requested:
        logger.info(f"GCA_BACKEND={override} overrides --backend {requested}")
    return override or requested


def command_config(args: argparse.Namespace) -> CommandConfig:
    """CommandConfig from parsed --N/--n/--backend/--format/--output flags."""
    return CommandConfig(
        N=args.N,
        n=args.n,
        backend=resolve_backend(args.backend),
        output_format=args.format,
        output_path=args.output,
    )


def write_output(text: str, path: Optional[str] = None):
    """Print to stdout, or write the file when a path is given."""
    if not text.endswith("\n"):
        text += "\n"
    if path:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {path}")
    else:
        sys.stdout.write(text)


def format_value(value, ctx: ScalarContext, output_format: str = "text") -> str:
    """Text or JSON form of an evaluation result (scalar, Element or State)."""
    if output_format == "json":
        return serialize(value)
    if isinstance(value, Cyclo):
        return ctx.format_scalar(value)
    if isinstance(value, State):
        return format_state(value)
    return format_element(value)
