#!/usr/bin/env python3
"""
Vector Moves - Twist, slide and slip identities on the ground state.

All checks compare exact states; words are written left to right and applied
right to left.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from errors import PreconditionError
from braids.word import BraidWord
from scalars.context import ScalarContext
from states.state import (
    all_kets,
    apply_projector,
    apply_word,
    basis_ket,
    ground,
    states_equal,
)

logger = logging.getLogger(__name__)


def _word(*pairs) -> BraidWord:
    return BraidWord(tuple(pairs))


def _require_sites(k: int, l: int, n: int):
    if not 1 <= k < l <= n:
        raise PreconditionError(f"expected 1 <= k < l <= n={n}, got k={k}, l={l}")


def _maps_ground_to(word: BraidWord, other: BraidWord, ctx: ScalarContext, n: int) -> bool:
    omega = ground(ctx, n)
    return states_equal(apply_word(word, omega), apply_word(other, omega))


def check_twist(ctx: ScalarContext, n: int, k: int, adjoint: bool = False) -> bool:
    """
    b_{2k-1,2k} E_k = ω^{-1/2} E_k on every basis ket.

    With ``adjoint`` the mirrored form b_{2k,2k-1} E_k = ω^{1/2} E_k is checked.
    """
    if not 1 <= k <= n:
        raise PreconditionError(f"twist site k={k} outside 1..{n}")
    if adjoint:
        word, factor = _word((2 * k, 2 * k - 1)), ctx.omega_sqrt
    else:
        word, factor = _word((2 * k - 1, 2 * k)), ctx.omega_sqrt.conj()
    for a in all_kets(n, ctx.N):
        projected = apply_projector(k, basis_ket(ctx, n, a))
        if not states_equal(apply_word(word, projected), factor * projected):
            logger.debug(f"twist k={k} fails on ket {a}")
            return False
    return True


def slide_word(k: int, l: int) -> BraidWord:
    """b_{2k,2l-1} b_{2l-1,2l} b_{2k-1,2k} b_{2k,2l-1}."""
    return _word((2 * k, 2 * l - 1), (2 * l - 1, 2 * l), (2 * k - 1, 2 * k), (2 * k, 2 * l - 1))


def slip_word(k: int, l: int) -> BraidWord:
    """b_{2k,2l-1} b_{2l-1,2l} b_{2k,2k-1} b_{2l-1,2k}."""
    return _word((2 * k, 2 * l - 1), (2 * l - 1, 2 * l), (2 * k, 2 * k - 1), (2 * l - 1, 2 * k))


def check_slide(ctx: ScalarContext, n: int, k: int, l: int) -> bool:
    """Slide word fixes the ground state; for (1,2) also b12 b23|Ω⟩ = b43 b32|Ω⟩."""
    _require_sites(k, l, n)
    omega = ground(ctx, n)
    if not states_equal(apply_word(slide_word(k, l), omega), omega):
        return False
    if (k, l) == (1, 2):
        return _maps_ground_to(_word((1, 2), (2, 3)), _word((4, 3), (3, 2)), ctx, n)
    return True


def check_general_slide_corollary(ctx: ScalarContext, n: int, k: int, l: int) -> bool:
    """b_{2k-1,2k} b_{2k,2l-1}|Ω⟩ = b_{2l,2l-1} b_{2l-1,2k}|Ω⟩."""
    _require_sites(k, l, n)
    left = _word((2 * k - 1, 2 * k), (2 * k, 2 * l - 1))
    right = _word((2 * l, 2 * l - 1), (2 * l - 1, 2 * k))
    return _maps_ground_to(left, right, ctx, n)


def check_slip(ctx: ScalarContext, n: int, k: int, l: int) -> bool:
    """Slip word fixes the ground state; for (1,2) also b21 b32|Ω⟩ = b43 b32|Ω⟩."""
    _require_sites(k, l, n)
    omega = ground(ctx, n)
    if not states_equal(apply_word(slip_word(k, l), omega), omega):
        return False
    if (k, l) == (1, 2):
        return _maps_ground_to(_word((2, 1), (3, 2)), _word((4, 3), (3, 2)), ctx, n)
    return True


@dataclass
class ChainReport:
    """b34 b23|Ω⟩ = b43 b32|Ω⟩ and the four-braid mirror (None when n < 3)."""
    short: bool
    long: Optional[bool]

    @property
    def passed(self) -> bool:
        return self.short and self.long is not False

    def to_dict(self) -> Dict:
        return {"short": self.short, "long": self.long, "passed": self.passed}


def check_chain_identities(ctx: ScalarContext, n: int) -> ChainReport:
    if n < 2:
        raise PreconditionError(f"chain identities need n >= 2, got {n}")
    short = _maps_ground_to(_word((3, 4), (2, 3)), _word((4, 3), (3, 2)), ctx, n)
    long = None
    if n >= 3:
        long = _maps_ground_to(_word((5, 6), (4, 5), (3, 4), (2, 3)),
                               _word((6, 5), (5, 4), (4, 3), (3, 2)), ctx, n)
    return ChainReport(short=short, long=long)


def check_nonlocal_entangler(ctx: ScalarContext, n: int) -> bool:
    """b42|Ω⟩ = ω^{-1/2} b34 b23|Ω⟩ = b34 b23 b34|Ω⟩."""
    if n < 2:
        raise PreconditionError(f"nonlocal entangler needs n >= 2, got {n}")
    omega = ground(ctx, n)
    nonlocal_state = apply_word(_word((4, 2)), omega)
    chain = apply_word(_word((3, 4), (2, 3)), omega)
    if not states_equal(nonlocal_state, ctx.omega_sqrt.conj() * chain):
        return False
    return states_equal(nonlocal_state, apply_word(_word((3, 4), (2, 3), (3, 4)), omega))
