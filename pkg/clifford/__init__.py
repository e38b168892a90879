"""
Clifford - Normal-form arithmetic in the generalized Clifford algebra C_{2n}^{(N)}.

This package provides:
- Monomial helpers and the normal-ordering product mono_mul
- Element: sparse normal-form elements with ring operations and adjoint
- Charge sectors, centrality tests and the center-based equality certificate
"""

from clifford.monomial import (
    Monomial,
    all_monomials,
    charge,
    format_monomial,
    generator_monomial,
    identity_monomial,
    mono_mul,
    normalize,
)
from clifford.element import (
    Element,
    adjoint,
    charge_apply,
    charge_decompose,
    constant_term,
    elem_add,
    elem_mul,
    elements_equal,
    format_element,
    from_scalar,
    generator,
    identity,
    is_neutral,
    monomial_element,
    scale,
    zero,
)
from clifford.center import Certificate, center_basis, certify_equal, is_central, subalgebra_map
from clifford.relations import check_commutation, check_generator_order

__all__ = [
    "Monomial",
    "all_monomials",
    "charge",
    "format_monomial",
    "generator_monomial",
    "identity_monomial",
    "mono_mul",
    "normalize",
    "Element",
    "adjoint",
    "charge_apply",
    "charge_decompose",
    "constant_term",
    "elem_add",
    "elem_mul",
    "elements_equal",
    "format_element",
    "from_scalar",
    "generator",
    "identity",
    "is_neutral",
    "monomial_element",
    "scale",
    "zero",
    "Certificate",
    "center_basis",
    "certify_equal",
    "is_central",
    "subalgebra_map",
    "check_commutation",
    "check_generator_order",
]
