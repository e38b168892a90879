#!/usr/bin/env python3
"""
Gauss Chart - Plot the normalized quadratic Gauss sums against N.

Shows |Σ q^{-i²}|/√N and |Σ q^{i-i²}|/√N for a range of N; the zeros line up
with N ≡ 2 and N ≡ 0 (mod 4) respectively.
"""

import logging
import math
import tempfile
from typing import List, Optional, Tuple

import matplotlib
matplotlib.use("Agg")  # Non-interactive backend
import matplotlib.pyplot as plt
import numpy as np

from scalars.gauss import GaussReport

logger = logging.getLogger(__name__)


COLORS = {
    "sum_a": "#2980b9",  # Blue
    "sum_b": "#e67e22",  # Orange
    "vanish": "#c0392b",  # Red
    "text": "#2c3e50",
    "grid": "#ecf0f1",
}


def normalized_magnitudes(reports: List[GaussReport]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """N values and |sum|/√N for both sums."""
    ns = np.array([r.N for r in reports])
    a = np.array([abs(complex(r.sum_a)) / math.sqrt(r.N) for r in reports])
    b = np.array([abs(complex(r.sum_b)) / math.sqrt(r.N) for r in reports])
    return ns, a, b


def create_gauss_chart(
    reports: List[GaussReport],
    output_path: Optional[str] = None,
    title: str = "Quadratic Gauss sums",
    figsize: Tuple[int, int] = (9, 4),
) -> str:
    """
    Create a stem chart of both normalized Gauss sums.

    Args:
        reports: gauss_diagnostics results, one per N
        output_path: Path to save the chart (uses temp file if not provided)
        title: Chart title
        figsize: Figure size (width, height)

    Returns:
        Path to the saved chart image
    """
    ns, a, b = normalized_magnitudes(reports)

    fig, ax = plt.subplots(figsize=figsize)
    fig.patch.set_facecolor("white")

    offset = 0.15
    ax.vlines(ns - offset, 0, a, color=COLORS["sum_a"], linewidth=2, label="|Σ q^(-i²)| / √N")
    ax.vlines(ns + offset, 0, b, color=COLORS["sum_b"], linewidth=2, label="|Σ q^(i-i²)| / √N")

    # exact zeros, not small floats
    zeros_a = [r.N for r in reports if r.vanishes_a]
    zeros_b = [r.N for r in reports if r.vanishes_b]
    ax.scatter(np.array(zeros_a) - offset, np.zeros(len(zeros_a)), marker="x", color=COLORS["vanish"], zorder=3)
    ax.scatter(np.array(zeros_b) + offset, np.zeros(len(zeros_b)), marker="x", color=COLORS["vanish"], zorder=3,
               label="exact zero")

    ax.set_xlabel("N", fontsize=11, color=COLORS["text"])
    ax.set_ylabel("magnitude / √N", fontsize=11, color=COLORS["text"])
    ax.set_ylim(0, max(1.6, float(max(a.max(initial=0), b.max(initial=0))) + 0.2))
    ax.set_title(title, fontsize=14, fontweight="bold", color=COLORS["text"], pad=15)
    ax.grid(axis="y", color=COLORS["grid"])
    ax.spines["top"].set_visible(False)
    ax.spines["right"].set_visible(False)
    ax.legend(loc="upper right", fontsize=8, framealpha=0.9)

    plt.tight_layout()

    if output_path is None:
        with tempfile.NamedTemporaryFile(suffix=".png", prefix="gauss_", delete=False) as handle:
            output_path = handle.name

    plt.savefig(output_path, dpi=150, bbox_inches="tight", facecolor="white")
    plt.close(fig)
    logger.info(f"Saved Gauss chart for N={int(ns.min())}..{int(ns.max())} to {output_path}")

    return output_path
