#!/usr/bin/env python3
"""
Render - SVG and TikZ text for diagram layouts.

Both renderers walk the same primitive list and fill a Jinja2 template from
the templates/ directory. Output depends only on the layout and the geometry,
so rendering twice yields identical bytes.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from jinja2 import Environment, FileSystemLoader, select_autoescape

from config import get_config
from diagrams.layout import Layout, Row

logger = logging.getLogger(__name__)

TEMPLATE_DIR = Path(__file__).parent.parent / "templates"


@dataclass
class Geometry:
    """Drawing constants in SVG user units."""
    strand_pitch: float
    row_height: float
    margin: float
    stroke_width: float
    tikz_unit: float

    @classmethod
    def from_config(cls, **overrides) -> "Geometry":
        """Geometry from configuration, with non-None keyword overrides (CLI flags)."""
        diagram = get_config().diagram
        values = {
            "strand_pitch": diagram.strand_pitch,
            "row_height": diagram.row_height,
            "margin": diagram.margin,
            "stroke_width": diagram.stroke_width,
            "tikz_unit": diagram.tikz_unit,
        }
        values.update({key: value for key, value in overrides.items() if value is not None})
        return cls(**values)


def _num(value: float) -> str:
    """Fixed formatting for coordinates."""
    text = f"{value:.2f}".rstrip("0").rstrip(".")
    return "0" if text == "-0" else text


def _create_environment() -> Environment:
    return Environment(
        loader=FileSystemLoader(str(TEMPLATE_DIR)),
        autoescape=select_autoescape(["html", "xml", "svg"]),
        keep_trailing_newline=True,
    )


# =============================================================================
# PRIMITIVES
# =============================================================================

class _Canvas:
    """Collects shapes row by row in drawing order."""

    def __init__(self, layout: Layout, geometry: Geometry):
        self.layout = layout
        self.g = geometry
        self.shapes: List[Dict[str, Any]] = []

    def x(self, strand: int) -> float:
        return self.g.margin + (strand - 1) * self.g.strand_pitch

    def y(self, row: int) -> float:
        return self.g.margin + row * self.g.row_height

    def line(self, x1, y1, x2, y2):
        self.shapes.append({"kind": "line", "x1": _num(x1), "y1": _num(y1), "x2": _num(x2), "y2": _num(y2)})

    def path(self, d: str, halo: bool = False):
        self.shapes.append({"kind": "path", "d": d, "halo": halo})

    def text(self, x, y, content: str, anchor: str = "middle"):
        self.shapes.append({"kind": "text", "x": _num(x), "y": _num(y), "content": content, "anchor": anchor})

    def rect(self, x, y, width, height):
        self.shapes.append({"kind": "rect", "x": _num(x), "y": _num(y),
                            "width": _num(width), "height": _num(height)})

    def strands(self, row: int, skip=()):
        for s in range(1, self.layout.strand_count + 1):
            if s not in skip:
                self.line(self.x(s), self.y(row), self.x(s), self.y(row + 1))

    def draw(self, index: int, row: Row):
        top, bottom = self.y(index), self.y(index + 1)
        mid = (top + bottom) / 2
        h = self.g.row_height

        if row.kind == "identity":
            self.strands(index)
        elif row.kind == "label":
            self.strands(index)
            self.text(self.x(row.strands[0]) - self.g.strand_pitch * 0.2, mid, str(row.exponent), anchor="end")
        elif row.kind == "crossing":
            left, right = row.strands
            self.strands(index, skip=row.strands)
            xl, xr = self.x(left), self.x(right)
            # positive crossing: the strand entering on the left passes over
            over = (xl, xr) if row.sign > 0 else (xr, xl)
            under = (over[1], over[0])
            self.path(f"M {_num(under[0])} {_num(top)} C {_num(under[0])} {_num(mid)}, "
                      f"{_num(under[1])} {_num(mid)}, {_num(under[1])} {_num(bottom)}")
            over_d = (f"M {_num(over[0])} {_num(top)} C {_num(over[0])} {_num(mid)}, "
                      f"{_num(over[1])} {_num(mid)}, {_num(over[1])} {_num(bottom)}")
            self.path(over_d, halo=True)
            self.path(over_d)
        elif row.kind == "capcup":
            left, right = row.strands
            self.strands(index, skip=row.strands)
            xl, xr = self.x(left), self.x(right)
            depth = top + h * 0.35
            rise = bottom - h * 0.35
            self.path(f"M {_num(xl)} {_num(top)} C {_num(xl)} {_num(depth)}, "
                      f"{_num(xr)} {_num(depth)}, {_num(xr)} {_num(top)}")
            self.path(f"M {_num(xl)} {_num(bottom)} C {_num(xl)} {_num(rise)}, "
                      f"{_num(xr)} {_num(rise)}, {_num(xr)} {_num(bottom)}")
            self.text(xr + self.g.strand_pitch * 0.3, mid, row.marker, anchor="start")
        elif row.kind in ("caps", "measure"):
            for k in range(1, self.layout.n + 1):
                xl, xr = self.x(2 * k - 1), self.x(2 * k)
                if row.kind == "caps":
                    apex = bottom - h * 0.6
                    self.path(f"M {_num(xl)} {_num(bottom)} C {_num(xl)} {_num(apex)}, "
                              f"{_num(xr)} {_num(apex)}, {_num(xr)} {_num(bottom)}")
                else:
                    apex = top + h * 0.6
                    self.path(f"M {_num(xl)} {_num(top)} C {_num(xl)} {_num(apex)}, "
                              f"{_num(xr)} {_num(apex)}, {_num(xr)} {_num(top)}")
            self.text(self.x(self.layout.strand_count) + self.g.strand_pitch * 0.3, mid, row.marker,
                      anchor="start")
        elif row.kind == "box":
            self.strands(index)
            pad = self.g.strand_pitch * 0.3
            x0 = self.x(row.strands[0]) - pad
            x1 = self.x(row.strands[-1]) + pad
            self.rect(x0, top + h * 0.15, x1 - x0, h * 0.7)
            self.text((x0 + x1) / 2, mid + 4, row.marker)


def _svg_context(layout: Layout, geometry: Geometry) -> Dict[str, Any]:
    canvas = _Canvas(layout, geometry)
    for index, row in enumerate(layout.rows):
        canvas.draw(index, row)
    width = 2 * geometry.margin + (layout.strand_count - 1) * geometry.strand_pitch
    height = 2 * geometry.margin + len(layout.rows) * geometry.row_height
    notes_height = 14 * len(layout.footnotes)
    notes = [
        {"x": _num(geometry.margin), "y": _num(height + 14 * i), "content": note}
        for i, note in enumerate(layout.footnotes)
    ]
    return {
        "width": _num(width + (4 * geometry.strand_pitch if layout.footnotes else geometry.strand_pitch)),
        "height": _num(height + notes_height),
        "stroke_width": _num(geometry.stroke_width),
        "halo_width": _num(geometry.stroke_width * 4),
        "shapes": canvas.shapes,
        "notes": notes,
    }


def render_svg(layout: Layout, geometry: Optional[Geometry] = None) -> str:
    geometry = geometry or Geometry.from_config()
    template = _create_environment().get_template("diagram.svg")
    return template.render(**_svg_context(layout, geometry))


# =============================================================================
# TIKZ
# =============================================================================

def _tikz_rows(layout: Layout) -> List[str]:
    """One macro call per primitive; x counts strands from 0, y counts rows."""
    calls = []
    for index, row in enumerate(layout.rows):
        y = str(index)
        if row.kind in ("identity", "label", "box"):
            for s in range(1, layout.strand_count + 1):
                calls.append(f"\\gcastrand{{{s - 1}}}{{{y}}}")
            if row.kind == "label":
                calls.append(f"\\gcalabel{{{row.strands[0] - 1}}}{{{y}}}{{{row.exponent}}}")
            elif row.kind == "box":
                calls.append(f"\\gcabox{{{row.strands[0] - 1}}}{{{row.strands[-1] - 1}}}{{{y}}}"
                             f"{{{row.marker}}}")
        elif row.kind in ("crossing", "capcup"):
            for s in range(1, layout.strand_count + 1):
                if s not in row.strands:
                    calls.append(f"\\gcastrand{{{s - 1}}}{{{y}}}")
            left = row.strands[0] - 1
            if row.kind == "crossing":
                macro = "\\gcapositive" if row.sign > 0 else "\\gcanegative"
                calls.append(f"{macro}{{{left}}}{{{y}}}")
            else:
                calls.append(f"\\gcacupcap{{{left}}}{{{y}}}{{{_tex_marker(row.marker)}}}")
        else:
            macro = "\\gcacaps" if row.kind == "caps" else "\\gcameasure"
            for k in range(layout.n):
                calls.append(f"{macro}{{{2 * k}}}{{{y}}}")
            calls.append(f"\\gcanote{{{layout.strand_count - 1}}}{{{y}}}{{{_tex_marker(row.marker)}}}")
    return calls


def _tex_marker(marker: str) -> str:
    if not marker.startswith("δ^"):
        return marker
    return f"$\\delta^{{{marker[2:]}}}$"


def render_tikz(layout: Layout, geometry: Optional[Geometry] = None) -> str:
    geometry = geometry or Geometry.from_config()
    template = _create_environment().get_template("diagram.tikz")
    return template.render(
        unit=_num(geometry.tikz_unit),
        row_scale=_num(geometry.row_height / geometry.strand_pitch),
        line_width=_num(geometry.stroke_width * 0.4),
        rows=len(layout.rows),
        strands=layout.strand_count,
        calls=_tikz_rows(layout),
        footnotes=layout.footnotes,
    )


# =============================================================================
# FILE OUTPUT
# =============================================================================

def _write(text: str, path: Optional[str]) -> str:
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
        logger.info(f"Wrote diagram to {path}")
    return text


def emit_svg(layout: Layout, path: Optional[str] = None, geometry: Optional[Geometry] = None) -> str:
    """
    Render a layout as a standalone SVG document.

    Args:
        layout: Layout from diagrams.layout
        path: File to write (text is only returned when omitted)
        geometry: Drawing constants (configuration defaults when omitted)

    Returns:
        SVG text

    Raises:
        OSError: the file cannot be written
    """
    return _write(render_svg(layout, geometry), path)


def emit_tikz(layout: Layout, path: Optional[str] = None, geometry: Optional[Geometry] = None) -> str:
    """Render a layout as a TikZ picture; see emit_svg."""
    return _write(render_tikz(layout, geometry), path)
