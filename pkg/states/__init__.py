"""
States - Exact qudit states, the ground-state moves and closed-form chain states.
"""

from states.state import (
    Atom,
    ElementAtom,
    GeneratorAtom,
    ProjectorAtom,
    State,
    StateOp,
    WordAtom,
    all_kets,
    apply_atom,
    apply_element,
    apply_generator,
    apply_projector,
    apply_stateop,
    apply_word,
    basis_ket,
    charges,
    format_state,
    ground,
    inner,
    states_equal,
    vev,
)
from states.moves import (
    ChainReport,
    check_chain_identities,
    check_general_slide_corollary,
    check_nonlocal_entangler,
    check_slide,
    check_slip,
    check_twist,
    slide_word,
    slip_word,
)
from states.closed_forms import (
    chain_normalization,
    chain_word,
    check_chain_projections,
    check_closed_form_chain,
    check_two_qudit_forms,
    closed_form_chain,
    closed_form_chain_odd,
    neutral_labels,
)

__all__ = [
    "Atom",
    "ElementAtom",
    "GeneratorAtom",
    "ProjectorAtom",
    "State",
    "StateOp",
    "WordAtom",
    "all_kets",
    "apply_atom",
    "apply_element",
    "apply_generator",
    "apply_projector",
    "apply_stateop",
    "apply_word",
    "basis_ket",
    "charges",
    "format_state",
    "ground",
    "inner",
    "states_equal",
    "vev",
    "ChainReport",
    "check_chain_identities",
    "check_general_slide_corollary",
    "check_nonlocal_entangler",
    "check_slide",
    "check_slip",
    "check_twist",
    "slide_word",
    "slip_word",
    "chain_normalization",
    "chain_word",
    "check_chain_projections",
    "check_closed_form_chain",
    "check_two_qudit_forms",
    "closed_form_chain",
    "closed_form_chain_odd",
    "neutral_labels",
]
