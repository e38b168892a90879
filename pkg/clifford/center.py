#!/usr/bin/env python3
"""
Center - Trivial-center computations and identity certification.

Because the algebra has trivial center, x = y follows from y^{-1}x commuting
with every generator together with matching constant terms.
"""

import logging
from dataclasses import dataclass, asdict
from typing import Dict, List, Mapping

from errors import IndexRangeError, PreconditionError
from clifford.element import (
    Element,
    constant_term,
    elements_equal,
    elem_mul,
    generator,
    identity,
)
from clifford.monomial import Monomial, all_monomials, generator_monomial, mono_mul

logger = logging.getLogger(__name__)


@dataclass
class Certificate:
    """Outcome of certify_equal."""
    central_check: bool
    constant_match: bool
    direct_equal: bool

    @property
    def passed(self) -> bool:
        return self.central_check and self.constant_match

    @property
    def agrees(self) -> bool:
        """Certificate verdict and direct comparison tell the same story."""
        return self.passed == self.direct_equal

    def to_dict(self) -> Dict:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def is_central(x: Element) -> bool:
    """x·c_i = c_i·x for every generator (which suffices for centrality)."""
    for i in range(1, 2 * x.n + 1):
        g = generator(x.ctx, x.n, i)
        if not elements_equal(elem_mul(x, g), elem_mul(g, x)):
            return False
    return True


def commutes_with_generators(r: Monomial, N: int) -> bool:
    """c^r c_k = c_k c^r for all k, i.e. Σ_{i<k} r_i ≡ Σ_{i>k} r_i (mod N)."""
    n = len(r) // 2
    for k in range(1, len(r) + 1):
        g = generator_monomial(k, n, N)
        if mono_mul(r, g, N)[0] != mono_mul(g, r, N)[0]:
            return False
    return True


def center_basis(N: int, n: int) -> List[Monomial]:
    """
    Monomials commuting with every generator.

    The commutation conditions form a linear system over Z_N whose only
    solution is r = 0, so the result is always the identity monomial.
    """
    if N < 2 or n < 1:
        raise PreconditionError(f"center_basis requires N >= 2 and n >= 1, got N={N}, n={n}")
    survivors = [r for r in all_monomials(n, N) if commutes_with_generators(r, N)]
    logger.debug(f"center_basis(N={N}, n={n}): {len(survivors)} survivor(s)")
    return survivors


def certify_equal(x: Element, y: Element, y_inv: Element) -> Certificate:
    """
    Certify x = y through the center.

    Args:
        x: Left-hand element
        y: Right-hand element
        y_inv: Claimed inverse of y

    Returns:
        Certificate; ``passed`` iff y_inv·x is central and the constant terms agree

    Raises:
        PreconditionError: y·y_inv is not the identity, or a constant term vanishes
    """
    one = identity(x.ctx, x.n)
    if not elements_equal(elem_mul(y, y_inv), one):
        raise PreconditionError("supplied y_inv is not an inverse of y")
    if x.ctx.is_zero(constant_term(x)):
        raise PreconditionError("zero constant term in x; certificate does not apply")
    if y.ctx.is_zero(constant_term(y)):
        raise PreconditionError("zero constant term in y; certificate does not apply")

    certificate = Certificate(
        central_check=is_central(elem_mul(y_inv, x)),
        constant_match=x.ctx.equal(constant_term(x), constant_term(y)),
        direct_equal=elements_equal(x, y),
    )
    if not certificate.agrees:
        logger.warning("certificate and direct comparison disagree")
    return certificate


def subalgebra_map(x: Element, index_map: Mapping[int, int], target_n: int = None) -> Element:
    """
    Relabel generators: c_1^a c_2^b ... ↦ c_{m(1)}^a c_{m(2)}^b ...

    Args:
        x: Element to map
        index_map: Generator index injection, strictly increasing
        target_n: Qudit count of the target algebra (defaults to x.n)

    Raises:
        PreconditionError: index_map is not strictly order-preserving or misses
            a generator used by x
        IndexRangeError: a target index lies outside 1..2·target_n
    """
    target_n = target_n or x.n
    keys = sorted(index_map)
    values = [index_map[k] for k in keys]
    if any(b <= a for a, b in zip(values, values[1:])):
        raise PreconditionError("index_map must be strictly order-preserving")
    for v in values:
        if not 1 <= v <= 2 * target_n:
            raise IndexRangeError(f"mapped index {v} outside 1..{2 * target_n}")

    terms: Dict[Monomial, object] = {}
    for r, c in x.terms.items():
        exps = [0] * (2 * target_n)
        for i, e in enumerate(r, start=1):
            if not e:
                continue
            if i not in index_map:
                raise PreconditionError(f"index_map does not cover generator c{i}")
            exps[index_map[i] - 1] = e
        terms[tuple(exps)] = c
    return Element(x.ctx, target_n, terms)
