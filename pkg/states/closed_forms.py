#!/usr/bin/env python3
"""
Closed-Form States - Entangled states produced by braid chains on the ground state.

The chain b_{2k-1,2k} ... b_{34} b_{23} applied to |Ω⟩ gives
    N^{-(k-1)/2} Σ_{Σa ≡ 0} ζ^{Σ a_i²} |a_1 ... a_k 0 ... 0⟩.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Dict, Tuple

from errors import PreconditionError
from braids.word import BraidWord
from clifford.element import elem_mul, generator, identity, monomial_element
from scalars.context import ScalarContext
from scalars.cyclotomic import Cyclo
from states.state import (
    State,
    apply_element,
    apply_word,
    ground,
    states_equal,
)

logger = logging.getLogger(__name__)


def _check_site(k: int, n: int):
    if not 1 <= k <= n:
        raise PreconditionError(f"chain length k={k} outside 1..{n}")


def chain_normalization(ctx: ScalarContext, k: int) -> Cyclo:
    """N^{-(k-1)/2}."""
    whole, odd = divmod(k - 1, 2)
    value = ctx.field.rational(Fraction(1, ctx.N ** whole))
    return value * ctx.inv_sqrtN if odd else value


def chain_word(k: int) -> BraidWord:
    """b_{2k-1,2k} b_{2k-2,2k-1} ... b_{23} (empty for k = 1)."""
    return BraidWord(tuple((j, j + 1) for j in range(2 * k - 1, 1, -1)))


def neutral_labels(N: int, k: int):
    """Every a ∈ (Z_N)^k with Σ a_i ≡ 0."""
    for head in product(range(N), repeat=k - 1):
        yield head + ((-sum(head)) % N,)


def closed_form_chain(k: int, ctx: ScalarContext, n: int) -> State:
    """N^{-(k-1)/2} Σ_{Σa≡0} ζ^{Σ a_i²} c_2^{a_1} ... c_{2k}^{a_k} |Ω⟩."""
    _check_site(k, n)
    norm = chain_normalization(ctx, k)
    coeffs: Dict[Tuple[int, ...], Cyclo] = {}
    for labels in neutral_labels(ctx.N, k):
        phase = ctx.zeta_step * sum(a * a for a in labels)
        coeffs[labels + (0,) * (n - k)] = norm.mul_root(phase)
    return State(ctx, n, coeffs)


def closed_form_chain_odd(k: int, ctx: ScalarContext, n: int) -> State:
    """The same state written with odd generators: N^{-(k-1)/2} Σ_{Σa≡0} c_1^{a_1} c_3^{a_2} ... |Ω⟩."""
    _check_site(k, n)
    norm = chain_normalization(ctx, k)
    omega = ground(ctx, n)
    total = State(ctx, n)
    for labels in neutral_labels(ctx.N, k):
        exps = [0] * (2 * n)
        for site, a in enumerate(labels):
            exps[2 * site] = a
        total = total + apply_element(monomial_element(ctx, n, exps), omega)
    return norm * total


def check_closed_form_chain(ctx: ScalarContext, n: int, k: int) -> bool:
    """Braid chain on |Ω⟩ equals the closed form exactly."""
    built = apply_word(chain_word(k), ground(ctx, n))
    return states_equal(built, closed_form_chain(k, ctx, n))


def check_two_qudit_forms(ctx: ScalarContext, n: int) -> bool:
    """b34 b23|Ω⟩ = N^{-1/2} Σ ζ^{i²} c_2^i c_3^{-i}|Ω⟩ = N^{-1/2} Σ q^{i²} c_2^i c_4^{-i}|Ω⟩."""
    if n < 2:
        raise PreconditionError(f"two-qudit forms need n >= 2, got {n}")
    N = ctx.N
    omega = ground(ctx, n)
    built = apply_word(chain_word(2), omega)
    odd_form = State(ctx, n)
    even_form = State(ctx, n)
    for i in range(N):
        exps = [0] * (2 * n)
        exps[1], exps[2] = i, -i
        odd_form = odd_form + ctx.zeta_power(i * i) * apply_element(monomial_element(ctx, n, exps), omega)
        exps = [0] * (2 * n)
        exps[1], exps[3] = i, -i
        even_form = even_form + ctx.q_power(i * i) * apply_element(monomial_element(ctx, n, exps), omega)
    odd_form = ctx.inv_sqrtN * odd_form
    even_form = ctx.inv_sqrtN * even_form
    return states_equal(built, odd_form) and states_equal(built, even_form)


def check_chain_projections(ctx: ScalarContext, n: int, k: int) -> bool:
    """⟨Ω| c_{2k-1}^{a_k} ... c_1^{a_1} · chain_k|Ω⟩ = N^{-(k-1)/2} for every Σa ≡ 0."""
    _check_site(k, n)
    chain = apply_word(chain_word(k), ground(ctx, n))
    expected = chain_normalization(ctx, k)
    zero_label = (0,) * n
    for labels in neutral_labels(ctx.N, k):
        probe = identity(ctx, n)
        for site in range(k, 0, -1):
            probe = elem_mul(probe, generator(ctx, n, 2 * site - 1, labels[site - 1]))
        value = apply_element(probe, chain).coefficient(zero_label)
        if not ctx.equal(value, expected):
            logger.debug(f"chain projection fails for labels {labels}")
            return False
    return True
