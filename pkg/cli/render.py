#!/usr/bin/env python3
"""
Render CLI - Draw a braid word or state expression as SVG or TikZ.

Usage:
    python -m cli.render --word "b[1,2]*b[2,3]" -o word.svg
    python -m cli.render --word "(b[2,3]*b[3,4]*b[1,2]*b[2,3])|vac>" -o slide.tex --format tikz
    python -m cli.render --word "E[1]" --n 2 --pitch 40 --row-height 50

The first-applied operator is drawn on top. --n defaults to the smallest
qudit count that fits every index in the word.
"""

import argparse
import sys

from errors import EXIT_PASS
from cli.common import write_output
from diagrams.layout import layout, required_qudits
from diagrams.render import Geometry, emit_svg, emit_tikz
from lang.parser import parse_text

HELP = "render a braid word or state expression as SVG or TikZ"


def add_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("--word", required=True, help="Braid word or state expression")
    parser.add_argument("--n", type=int, help="Number of qudits (default: inferred from the word)")
    parser.add_argument("--format", choices=("svg", "tikz"), default="svg", help="Output format")
    parser.add_argument("-o", "--output", help="Output file (default: stdout)")
    parser.add_argument("--measure", action="store_true", help="Close the diagram with a measure row")
    parser.add_argument("--pitch", type=float, help="Strand spacing")
    parser.add_argument("--row-height", type=float, help="Row height")
    parser.add_argument("--margin", type=float, help="Outer margin")
    parser.add_argument("--stroke-width", type=float, help="Line width")


def run(args: argparse.Namespace) -> int:
    ast = parse_text(args.word)
    n = args.n if args.n is not None else required_qudits(ast)
    diagram = layout(ast, n, measure=args.measure)
    geometry = Geometry.from_config(
        strand_pitch=args.pitch,
        row_height=args.row_height,
        margin=args.margin,
        stroke_width=args.stroke_width,
    )
    emit = emit_svg if args.format == "svg" else emit_tikz
    text = emit(diagram, args.output, geometry)
    if not args.output:
        write_output(text)
    return EXIT_PASS


def main(argv=None):
    from gca_cli import cli_run
    sys.exit(cli_run(["render"] + list(sys.argv[1:] if argv is None else argv)))


if __name__ == "__main__":
    main()
