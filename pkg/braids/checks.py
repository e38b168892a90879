#!/usr/bin/env python3
"""
Braid Identity Checks - Exact verification of the operator identities.

Every check returns a boolean from direct normal-form comparison; the
certificate helpers additionally reproduce the center-based arguments.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional

from errors import PreconditionError
from braids.word import BraidWord, braid_element, check_pair, word_eval
from clifford.center import certify_equal, is_central
from clifford.element import (
    Element,
    constant_term,
    elem_mul,
    elements_equal,
    identity,
    monomial_element,
    scale,
)
from scalars.context import ScalarContext
from scalars.cyclotomic import Cyclo
from scalars.gauss import gauss_diagnostics

logger = logging.getLogger(__name__)


def _pair_monomial(ctx: ScalarContext, n: int, k: int, a: int, l: int, b: int) -> Element:
    """c_k^a c_l^b for k < l (already normal-ordered)."""
    exps = [0] * (2 * n)
    exps[k - 1] = a
    exps[l - 1] = b
    return monomial_element(ctx, n, exps)


def _require_ordered(k: int, l: int, n: int):
    check_pair(k, l, n)
    if k > l:
        raise PreconditionError(f"expected k < l, got ({k},{l})")


def check_master_intertwiner(ctx: ScalarContext, n: int, k: int, l: int, a: int, b: int) -> bool:
    """b_kl c_k^a c_l^b = q^{a²+ab} c_k^{2a+b} c_l^{-a} b_kl."""
    _require_ordered(k, l, n)
    braid = braid_element(k, l, ctx, n)
    lhs = elem_mul(braid, _pair_monomial(ctx, n, k, a, l, b))
    rhs = scale(ctx.q_power(a * a + a * b),
                elem_mul(_pair_monomial(ctx, n, k, 2 * a + b, l, -a), braid))
    return elements_equal(lhs, rhs)


def check_adjoint_intertwiner(ctx: ScalarContext, n: int, k: int, l: int, r: int, s: int) -> bool:
    """b_lk c_k^r c_l^s = q^{rs+s²} c_k^{-s} c_l^{r+2s} b_lk."""
    _require_ordered(k, l, n)
    braid = braid_element(l, k, ctx, n)
    lhs = elem_mul(braid, _pair_monomial(ctx, n, k, r, l, s))
    rhs = scale(ctx.q_power(r * s + s * s),
                elem_mul(_pair_monomial(ctx, n, k, -s, l, r + 2 * s), braid))
    return elements_equal(lhs, rhs)


def check_neutral_commutation(ctx: ScalarContext, n: int, k: int, l: int, a: int, b: int,
                              p: Optional[int] = None) -> bool:
    """
    Commutation of neutral pairs c_k^a c_l^{-a}.

    Checks that two neutral pairs commute, that a pair commutes with an
    outer generator c_p (p < k or p > l; skipped when p is None) and that
    b_kl commutes with the pair.
    """
    _require_ordered(k, l, n)
    if p is not None and k <= p <= l:
        raise PreconditionError(f"outer generator index {p} must lie outside [{k},{l}]")
    pair_a = _pair_monomial(ctx, n, k, a, l, -a)
    pair_b = _pair_monomial(ctx, n, k, b, l, -b)
    if not elements_equal(elem_mul(pair_b, pair_a), elem_mul(pair_a, pair_b)):
        return False
    if p is not None:
        exps = [0] * (2 * n)
        exps[p - 1] = 1
        gen = monomial_element(ctx, n, exps)
        if not elements_equal(elem_mul(pair_a, gen), elem_mul(gen, pair_a)):
            return False
    braid = braid_element(k, l, ctx, n)
    return elements_equal(elem_mul(braid, pair_a), elem_mul(pair_a, braid))


def check_charge_transport(ctx: ScalarContext, n: int, k: int, l: int) -> bool:
    """b_kl c_l = c_k b_kl and its mirror b_lk c_k = c_l b_lk."""
    _require_ordered(k, l, n)
    ck = _pair_monomial(ctx, n, k, 1, l, 0)
    cl = _pair_monomial(ctx, n, k, 0, l, 1)
    forward = braid_element(k, l, ctx, n)
    backward = braid_element(l, k, ctx, n)
    return (elements_equal(elem_mul(forward, cl), elem_mul(ck, forward))
            and elements_equal(elem_mul(backward, ck), elem_mul(cl, backward)))


def check_unitarity(ctx: ScalarContext, n: int, k: int, l: int) -> bool:
    """b_kl b_lk = b_lk b_kl = 1."""
    check_pair(k, l, n)
    one = identity(ctx, n)
    forward = braid_element(k, l, ctx, n)
    backward = braid_element(l, k, ctx, n)
    return (elements_equal(elem_mul(forward, backward), one)
            and elements_equal(elem_mul(backward, forward), one))


def check_unitarity_certificate(ctx: ScalarContext, n: int, k: int, l: int) -> bool:
    """b_kl b_lk is central with constant term 1, hence equal to 1."""
    check_pair(k, l, n)
    product = elem_mul(braid_element(k, l, ctx, n), braid_element(l, k, ctx, n))
    one = identity(ctx, n)
    return certify_equal(product, one, one).passed


def check_yang_baxter(ctx: ScalarContext, n: int, i: int, j: int, k: int) -> bool:
    """b_ij b_jk b_ij = b_jk b_ij b_jk."""
    if not i < j < k:
        raise PreconditionError(f"expected i < j < k, got ({i},{j},{k})")
    check_pair(i, k, n)
    lhs = word_eval(BraidWord(((i, j), (j, k), (i, j))), ctx, n)
    rhs = word_eval(BraidWord(((j, k), (i, j), (j, k))), ctx, n)
    return elements_equal(lhs, rhs)


def check_distant_commutation(ctx: ScalarContext, n: int, i: int, j: int, k: int, l: int) -> bool:
    """b_ij b_kl = b_kl b_ij for disjoint, non-interleaved index pairs."""
    check_pair(i, j, n)
    check_pair(k, l, n)
    lo1, hi1 = sorted((i, j))
    lo2, hi2 = sorted((k, l))
    disjoint = hi1 < lo2 or hi2 < lo1
    nested = (lo1 < lo2 and hi2 < hi1) or (lo2 < lo1 and hi1 < hi2)
    if not (disjoint or nested):
        raise PreconditionError(f"pairs ({i},{j}) and ({k},{l}) interleave or overlap")
    first = braid_element(i, j, ctx, n)
    second = braid_element(k, l, ctx, n)
    return elements_equal(elem_mul(first, second), elem_mul(second, first))


@dataclass
class YangBaxterCertificate:
    """The center-based argument for b_ij b_jk b_ij = b_jk b_ij b_jk."""
    triple: tuple
    central: bool
    constant_lhs: Cyclo
    constant_rhs: Cyclo
    cross_lhs: Cyclo  # coefficient of c_j c_k^{-1}
    cross_rhs: Cyclo
    sum_a_vanishes: bool
    sum_b_vanishes: bool

    @property
    def constant_route(self) -> bool:
        return not self.constant_lhs.is_zero() and self.constant_lhs == self.constant_rhs

    @property
    def cross_route(self) -> bool:
        return not self.cross_lhs.is_zero() and self.cross_lhs == self.cross_rhs

    @property
    def passed(self) -> bool:
        return self.central and (self.constant_route or self.cross_route)

    def to_dict(self) -> Dict:
        return {
            "triple": list(self.triple),
            "central": self.central,
            "constant_route": self.constant_route,
            "cross_route": self.cross_route,
            "sum_a_vanishes": self.sum_a_vanishes,
            "sum_b_vanishes": self.sum_b_vanishes,
            "passed": self.passed,
        }


def yang_baxter_certificate(ctx: ScalarContext, n: int, i: int, j: int, k: int) -> YangBaxterCertificate:
    """
    Certificate route for the braid relation.

    y^{-1}x = (b_kj b_ji b_kj)(b_ij b_jk b_ij) must be central; the scalar is
    then fixed by the constant term, or by the c_j c_k^{-1} coefficient when
    the constant term vanishes (N ≡ 2 mod 4).
    """
    if not i < j < k:
        raise PreconditionError(f"expected i < j < k, got ({i},{j},{k})")
    check_pair(i, k, n)
    lhs = word_eval(BraidWord(((i, j), (j, k), (i, j))), ctx, n)
    rhs = word_eval(BraidWord(((j, k), (i, j), (j, k))), ctx, n)
    rhs_inverse = word_eval(BraidWord(((k, j), (j, i), (k, j))), ctx, n)

    cross = [0] * (2 * n)
    cross[j - 1] = 1
    cross[k - 1] = ctx.N - 1
    cross = tuple(cross)

    gauss = gauss_diagnostics(ctx.N)
    certificate = YangBaxterCertificate(
        triple=(i, j, k),
        central=is_central(elem_mul(rhs_inverse, lhs)),
        constant_lhs=constant_term(lhs),
        constant_rhs=constant_term(rhs),
        cross_lhs=lhs.coefficient(cross),
        cross_rhs=rhs.coefficient(cross),
        sum_a_vanishes=gauss.vanishes_a,
        sum_b_vanishes=gauss.vanishes_b,
    )
    logger.debug(f"YBE certificate {certificate.triple}: {certificate.to_dict()}")
    return certificate
