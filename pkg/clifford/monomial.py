#!/usr/bin/env python3
"""
Monomials - Normal-ordered generator words c_1^{r_1} c_2^{r_2} ... c_{2n}^{r_{2n}}.

A monomial is a tuple of 2n exponents, each reduced mod N. Products are
brought back to normal order with the commutation rule c_i c_j = q c_j c_i
(i < j), which only ever produces a power of q.
"""

from itertools import product
from typing import Iterator, Sequence, Tuple

from errors import IndexRangeError

Monomial = Tuple[int, ...]


def normalize(exps: Sequence[int], N: int) -> Monomial:
    """Reduce an exponent vector mod N (negative exponents become N - |e|)."""
    return tuple(e % N for e in exps)


def identity_monomial(n: int) -> Monomial:
    return (0,) * (2 * n)


def generator_monomial(i: int, n: int, N: int, power: int = 1) -> Monomial:
    """The monomial c_i^power (1-based i)."""
    if not 1 <= i <= 2 * n:
        raise IndexRangeError(f"generator index {i} outside 1..{2 * n}")
    exps = [0] * (2 * n)
    exps[i - 1] = power % N
    return tuple(exps)


def mono_mul(r: Monomial, s: Monomial, N: int) -> Tuple[int, Monomial]:
    """
    Product of two normal-ordered monomials.

    Returns (phase, t) with c^r · c^s = q^phase · c^t. Each right factor
    c_j^{s_j} moves left past every left factor c_k^{r_k} with k > j,
    picking up q^{-s_j r_k}.

    Args:
        r: Left monomial
        s: Right monomial
        N: Qudit dimension

    Returns:
        Tuple of (phase exponent mod N, product monomial)
    """
    phase = 0
    suffix = 0  # Σ_{k>j} r_k while scanning j from the right
    for j in range(len(r) - 1, -1, -1):
        if s[j]:
            phase -= s[j] * suffix
        suffix += r[j]
    t = tuple((a + b) % N for a, b in zip(r, s))
    return phase % N, t


def charge(r: Monomial, N: int) -> int:
    """Σ r_i mod N."""
    return sum(r) % N


def all_monomials(n: int, N: int) -> Iterator[Monomial]:
    """Every normal-ordered monomial on 2n generators, lexicographically."""
    return product(range(N), repeat=2 * n)


def format_monomial(r: Monomial) -> str:
    """Human-readable product like c1*c2^2, or 1 for the identity."""
    parts = []
    for i, e in enumerate(r, start=1):
        if e == 1:
            parts.append(f"c{i}")
        elif e:
            parts.append(f"c{i}^{e}")
    return "*".join(parts) if parts else "1"
