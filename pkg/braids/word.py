#!/usr/bin/env python3
"""
Braid Words - Braid elements b_kl and products of them.

b_kl = (ω^{±1/2}/√N) Σ_i c_k^i c_l^{-i}, with ω^{1/2} for k < l and ω^{-1/2}
for k > l. A word is read left to right and applied right to left.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple

from errors import IndexRangeError, PreconditionError
from clifford.element import Element, elem_mul, identity
from clifford.monomial import generator_monomial, mono_mul
from scalars.context import ScalarContext

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@dataclass(frozen=True)
class BraidWord:
    """Sequence of (k, l) factors; k < l positive braid, k > l its adjoint."""
    factors: Tuple[Pair, ...] = ()

    @classmethod
    def of(cls, pairs: Iterable[Sequence[int]]) -> "BraidWord":
        return cls(tuple((int(k), int(l)) for k, l in pairs))

    def validate(self, n: int) -> "BraidWord":
        for k, l in self.factors:
            check_pair(k, l, n)
        return self

    def adjoint(self) -> "BraidWord":
        """Reverse the word and flip each pair."""
        return BraidWord(tuple((l, k) for k, l in reversed(self.factors)))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return "*".join(f"b[{k},{l}]" for k, l in self.factors)


def check_pair(k: int, l: int, n: int):
    if k == l:
        raise PreconditionError(f"braid indices must differ, got ({k},{l})")
    for index in (k, l):
        if not 1 <= index <= 2 * n:
            raise IndexRangeError(f"braid index {index} outside 1..{2 * n}")


@lru_cache(maxsize=4096)
def braid_element(k: int, l: int, ctx: ScalarContext, n: int) -> Element:
    """
    The braid element b_kl in C_{2n}^{(N)}.

    Args:
        k: First strand index (1-based)
        l: Second strand index (1-based), l != k
        ctx: Scalar context
        n: Number of qudits

    Returns:
        Normal-form Element
    """
    check_pair(k, l, n)
    N = ctx.N
    half = ctx.omega_sqrt if k < l else ctx.omega_sqrt.conj()
    prefactor = half * ctx.inv_sqrtN
    terms = {}
    for i in range(N):
        phase, t = mono_mul(generator_monomial(k, n, N, i), generator_monomial(l, n, N, -i), N)
        terms[t] = prefactor.mul_root(phase * ctx.q_step)
    return Element(ctx, n, terms)


def word_eval(word: BraidWord, ctx: ScalarContext, n: int) -> Element:
    """Normal-form product of the word's braid elements (empty word is the identity)."""
    result = identity(ctx, n)
    for k, l in word.factors:
        result = elem_mul(result, braid_element(k, l, ctx, n))
    return result
