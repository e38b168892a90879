"""
Diagrams - Graphical-primitive layouts of braid words and states, rendered as SVG or TikZ.

This package provides:
- layout: rows of strands, charge labels, crossings, cup-caps, caps and measures
- emit_svg / emit_tikz: deterministic text output through the templates/ directory
"""

from diagrams.layout import ROW_KINDS, Layout, Row, layout, required_qudits
from diagrams.render import Geometry, emit_svg, emit_tikz, render_svg, render_tikz

__all__ = [
    "ROW_KINDS",
    "Layout",
    "Row",
    "layout",
    "required_qudits",
    "Geometry",
    "emit_svg",
    "emit_tikz",
    "render_svg",
    "render_tikz",
]
