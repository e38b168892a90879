"""
Scalars - Exact cyclotomic arithmetic for the Clifford workbench.

This package provides:
- Cyclo: exact elements of Q(ζ_M) in canonical reduced form
- ScalarContext: q, ζ, ω, ω^{1/2} and √N for one qudit dimension
- gauss_diagnostics: vanishing tests for the quadratic Gauss sums
"""

from scalars.cyclotomic import (
    Cyclo,
    CyclotomicField,
    add,
    conj,
    cyclo_eq,
    cyclotomic_polynomial,
    embed_complex,
    get_field,
    inv,
    mul,
    neg,
)
from scalars.context import ScalarContext, context_new
from scalars.gauss import GaussReport, gauss_diagnostics, gauss_table, hansen_closed_forms

__all__ = [
    "Cyclo",
    "CyclotomicField",
    "add",
    "conj",
    "cyclo_eq",
    "cyclotomic_polynomial",
    "embed_complex",
    "get_field",
    "inv",
    "mul",
    "neg",
    "ScalarContext",
    "context_new",
    "GaussReport",
    "gauss_diagnostics",
    "gauss_table",
    "hansen_closed_forms",
]
