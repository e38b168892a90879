"""
Oracle - Independent dense matrix representation used to cross-check exact results.
"""

from oracle.representation import (
    RepContext,
    braid_matrix,
    build_rep,
    clock_matrix,
    elem_to_matrix,
    shift_matrix,
    state_to_vector,
    verify_rep,
    word_to_matrix,
)
from oracle.validation import CrossValidation, check_faithfulness, cross_validate, cross_validate_word

__all__ = [
    "RepContext",
    "braid_matrix",
    "build_rep",
    "clock_matrix",
    "elem_to_matrix",
    "shift_matrix",
    "state_to_vector",
    "verify_rep",
    "word_to_matrix",
    "CrossValidation",
    "check_faithfulness",
    "cross_validate",
    "cross_validate_word",
]
