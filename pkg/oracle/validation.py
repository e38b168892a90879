#!/usr/bin/env python3
"""
Cross Validation - Compare the exact symbolic path against the matrix oracle.
"""

import logging
from dataclasses import dataclass
from typing import Dict

import numpy as np

from errors import PreconditionError
from braids.word import BraidWord
from clifford.element import Element
from clifford.monomial import all_monomials
from oracle.representation import (
    RepContext,
    elem_to_matrix,
    state_to_vector,
    word_to_matrix,
)
from states.state import State, apply_element, apply_word

logger = logging.getLogger(__name__)


@dataclass
class CrossValidation:
    """Largest coordinate deviation between symbolic and numeric results."""
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation < self.tolerance

    def to_dict(self) -> Dict:
        return {"max_deviation": self.max_deviation, "tolerance": self.tolerance, "passed": self.passed}


def _compare(symbolic: State, numeric: np.ndarray, rc: RepContext, tol: float) -> CrossValidation:
    deviation = float(np.max(np.abs(state_to_vector(symbolic, rc) - numeric))) if rc.dim else 0.0
    return CrossValidation(max_deviation=deviation, tolerance=tol)


def cross_validate(x: Element, s: State, rc: RepContext, tol: float = 1e-9) -> CrossValidation:
    """apply_element(x, s) against elem_to_matrix(x) · vector(s)."""
    if tol <= 0:
        raise PreconditionError(f"tolerance must be positive, got {tol}")
    numeric = elem_to_matrix(x, rc) @ state_to_vector(s, rc)
    return _compare(apply_element(x, s), numeric, rc, tol)


def cross_validate_word(word: BraidWord, s: State, rc: RepContext, tol: float = 1e-9) -> CrossValidation:
    """apply_word(word, s) against the product of braid matrices built from the generators."""
    if tol <= 0:
        raise PreconditionError(f"tolerance must be positive, got {tol}")
    numeric = word_to_matrix(word, rc) @ state_to_vector(s, rc)
    return _compare(apply_word(word, s), numeric, rc, tol)


def check_faithfulness(rc: RepContext) -> bool:
    """
    The N^{2n} monomial matrices are linearly independent.

    Rank of the matrix whose rows are the flattened monomial matrices.
    """
    rows = [rc.monomial_matrix(r).ravel() for r in all_monomials(rc.n, rc.N)]
    rank = np.linalg.matrix_rank(np.array(rows))
    logger.info(f"Faithfulness: rank {rank} of {len(rows)} monomial matrices")
    return rank == len(rows)
