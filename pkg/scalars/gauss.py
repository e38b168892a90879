#!/usr/bin/env python3
"""
Gauss Sum Diagnostics - The quadratic sums behind the braid relation constant.

The two sums Σ q^{-i²} and Σ q^{i-i²} decide which coefficient carries the
proof that the braid relation holds with constant 1; their vanishing is
periodic in N mod 4. Sums are computed exactly in Q(ζ_N) (every q-power lives
there), so large N stays cheap. Serialized sums therefore carry "M": N, not the
16·N² of a ScalarContext; GaussReport.from_dict reads them back in Q(ζ_N).
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Tuple

from errors import PreconditionError
from scalars.cyclotomic import Cyclo, embed_complex, get_field

logger = logging.getLogger(__name__)


@dataclass
class GaussReport:
    """Result of gauss_diagnostics for one N."""
    N: int
    sum_a: Cyclo
    sum_b: Cyclo
    vanishes_a: bool
    vanishes_b: bool
    hansen_residuals: Tuple[float, float]

    def to_dict(self) -> Dict:
        from lang.serialization import cyclo_to_data
        return {
            "N": self.N,
            "sum_a": cyclo_to_data(self.sum_a),
            "sum_b": cyclo_to_data(self.sum_b),
            "vanishes_a": self.vanishes_a,
            "vanishes_b": self.vanishes_b,
            "hansen_residuals": [self.hansen_residuals[0], self.hansen_residuals[1]],
        }

    @classmethod
    def from_dict(cls, data: Dict) -> "GaussReport":
        from lang.serialization import cyclo_in_field
        field = get_field(data["N"])
        return cls(
            N=data["N"],
            sum_a=cyclo_in_field(data["sum_a"], field),
            sum_b=cyclo_in_field(data["sum_b"], field),
            vanishes_a=data["vanishes_a"],
            vanishes_b=data["vanishes_b"],
            hansen_residuals=tuple(data["hansen_residuals"]),
        )


def quadratic_sum(N: int, linear: int = 0, quadratic: int = 1) -> Cyclo:
    """Σ_{i=0}^{N-1} q^{linear·i + quadratic·i²} in Q(ζ_N)."""
    field = get_field(N)
    raw: Dict[int, int] = {}
    for i in range(N):
        k = (linear * i + quadratic * i * i) % N
        raw[k] = raw.get(k, 0) + 1
    return field.reduce(raw)


def hansen_closed_forms(N: int) -> Tuple[float, float]:
    """Closed forms of Σ cos(2πk²/N) and Σ sin(2πk²/N)."""
    half_root = math.sqrt(N) / 2
    c = math.cos(N * math.pi / 2)
    s = math.sin(N * math.pi / 2)
    return half_root * (1 + c + s), half_root * (1 + c - s)


def gauss_diagnostics(N: int) -> GaussReport:
    """
    Exact Gauss-sum vanishing tests plus the Hansen cross-check.

    Args:
        N: Qudit dimension, at least 2

    Returns:
        GaussReport with both sums, their vanishing flags and the absolute
        residuals of Σ q^{k²} (real, imaginary) against the closed forms
    """
    if N < 2:
        raise PreconditionError(f"N must be >= 2, got {N}")

    sum_a = quadratic_sum(N, linear=0, quadratic=-1)
    sum_b = quadratic_sum(N, linear=1, quadratic=-1)

    value = embed_complex(quadratic_sum(N, 0, 1))
    cos_form, sin_form = hansen_closed_forms(N)
    residuals = (abs(float(value.real) - cos_form), abs(float(value.imag) - sin_form))

    report = GaussReport(
        N=N,
        sum_a=sum_a,
        sum_b=sum_b,
        vanishes_a=sum_a.is_zero(),
        vanishes_b=sum_b.is_zero(),
        hansen_residuals=residuals,
    )
    logger.debug(f"Gauss sums N={N}: vanishes_a={report.vanishes_a}, vanishes_b={report.vanishes_b}")
    return report


def gauss_table(n_max: int, n_min: int = 2) -> List[GaussReport]:
    """gauss_diagnostics for every N in n_min..n_max."""
    return [gauss_diagnostics(N) for N in range(n_min, n_max + 1)]
