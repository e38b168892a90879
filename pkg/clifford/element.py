#!/usr/bin/env python3
"""
Elements - Sparse normal-form elements of the generalized Clifford algebra.

An Element is Σ x_r c^r over normal-ordered monomials r with nonzero exact
scalars. Every operation returns normal form, so equality is coefficient-wise.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Union

from errors import BackendMismatchError, PreconditionError
from clifford.monomial import (
    Monomial,
    charge,
    format_monomial,
    generator_monomial,
    identity_monomial,
    mono_mul,
    normalize,
)
from scalars.context import ScalarContext
from scalars.cyclotomic import Cyclo, mul_raw

logger = logging.getLogger(__name__)

Scalar = Union[Cyclo, int, Fraction]


class Element:
    """
    An element of C_{2n}^{(N)} in normal form.

    Treat instances as immutable. ``terms`` maps monomials to nonzero Cyclo
    coefficients and iterates in lexicographic monomial order.
    """

    __slots__ = ("ctx", "n", "terms")

    def __init__(self, ctx: ScalarContext, n: int, terms: Optional[Mapping[Monomial, Cyclo]] = None):
        if n < 1:
            raise PreconditionError(f"number of qudits n must be >= 1, got {n}")
        self.ctx = ctx
        self.n = n
        cleaned = {r: c for r, c in (terms or {}).items() if not c.is_zero()}
        self.terms: Dict[Monomial, Cyclo] = dict(sorted(cleaned.items()))

    @property
    def N(self) -> int:
        return self.ctx.N

    @classmethod
    def from_raw(cls, ctx: ScalarContext, n: int,
                 raw: Mapping[Monomial, Mapping[int, Fraction]]) -> "Element":
        """Reduce per-monomial raw ζ_M coefficient sums into an Element."""
        field = ctx.field
        return cls(ctx, n, {r: field.reduce(coeffs) for r, coeffs in raw.items()})

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def __add__(self, other: "Element") -> "Element":
        return elem_add(self, other)

    def __sub__(self, other: "Element") -> "Element":
        return elem_add(self, -other)

    def __neg__(self) -> "Element":
        return Element(self.ctx, self.n, {r: -c for r, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return elem_mul(self, other)
        if isinstance(other, (Cyclo, int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Cyclo, int, Fraction)):
            return scale(other, self)
        return NotImplemented

    def __pow__(self, exponent: int) -> "Element":
        if not isinstance(exponent, int) or exponent < 0:
            raise PreconditionError("only non-negative integer powers of elements are defined")
        result = identity(self.ctx, self.n)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.N == other.N and self.terms == other.terms

    __hash__ = None

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, r: Monomial) -> Cyclo:
        return self.terms.get(tuple(r), self.ctx.zero())

    def __repr__(self) -> str:
        return f"Element(N={self.N}, n={self.n}, terms={len(self.terms)})"

    def __str__(self) -> str:
        return format_element(self)


# =============================================================================
# CONSTRUCTORS
# =============================================================================

def zero(ctx: ScalarContext, n: int) -> Element:
    return Element(ctx, n)


def identity(ctx: ScalarContext, n: int) -> Element:
    return Element(ctx, n, {identity_monomial(n): ctx.one()})


def generator(ctx: ScalarContext, n: int, i: int, power: int = 1) -> Element:
    """c_i^power; negative powers normalize (c^{-1} = c^{N-1})."""
    return Element(ctx, n, {generator_monomial(i, n, ctx.N, power): ctx.one()})


def monomial_element(ctx: ScalarContext, n: int, exps: Iterable[int], scalar: Scalar = 1) -> Element:
    exps = list(exps)
    if len(exps) != 2 * n:
        raise PreconditionError(f"monomial needs {2 * n} exponents, got {len(exps)}")
    return Element(ctx, n, {normalize(exps, ctx.N): ctx.scalar(scalar)})


def from_scalar(ctx: ScalarContext, n: int, scalar: Scalar) -> Element:
    return Element(ctx, n, {identity_monomial(n): ctx.scalar(scalar)})


# =============================================================================
# OPERATIONS
# =============================================================================

def check_compatible(x: Element, y: Element):
    """Raise unless x and y live in the same algebra under the same backend."""
    if x.N != y.N or x.n != y.n:
        raise PreconditionError(
            f"elements from different algebras: (N={x.N}, n={x.n}) vs (N={y.N}, n={y.n})")
    if x.ctx.backend != y.ctx.backend:
        raise BackendMismatchError(
            f"cannot combine {x.ctx.backend} and {y.ctx.backend} backend values")


def elem_add(x: Element, y: Element) -> Element:
    check_compatible(x, y)
    terms = dict(x.terms)
    for r, c in y.terms.items():
        terms[r] = terms[r] + c if r in terms else c
    return Element(x.ctx, x.n, terms)


def scale(alpha: Scalar, x: Element) -> Element:
    alpha = x.ctx.scalar(alpha)
    if alpha.is_zero():
        return zero(x.ctx, x.n)
    return Element(x.ctx, x.n, {r: alpha * c for r, c in x.terms.items()})


def elem_mul(x: Element, y: Element) -> Element:
    """
    Normal-form product.

    Each pair of monomials contributes a·b·q^phase to the product monomial;
    raw ζ_M sums are reduced once per output monomial.
    """
    check_compatible(x, y)
    ctx = x.ctx
    N = ctx.N
    step = ctx.q_step
    acc: Dict[Monomial, Dict[int, Fraction]] = {}
    for r, a in x.terms.items():
        for s, b in y.terms.items():
            phase, t = mono_mul(r, s, N)
            bucket = acc.get(t)
            if bucket is None:
                bucket = acc[t] = {}
            mul_raw(a, b, phase * step, bucket)
    return Element.from_raw(ctx, x.n, acc)


def adjoint(x: Element) -> Element:
    """
    Hermitian adjoint: c_i^† = c_i^{N-1}, scalars conjugated, order reversed.

    (c_1^{r_1} ... c_{2n}^{r_{2n}})^† = c_{2n}^{-r_{2n}} ... c_1^{-r_1}, brought
    back to normal order with mono_mul.
    """
    ctx = x.ctx
    N = ctx.N
    size = 2 * x.n
    step = ctx.q_step
    acc: Dict[Monomial, Dict[int, Fraction]] = {}
    for r, a in x.terms.items():
        phase = 0
        current = identity_monomial(x.n)
        for i in range(size - 1, -1, -1):
            if not r[i]:
                continue
            factor = [0] * size
            factor[i] = (-r[i]) % N
            p, current = mono_mul(current, tuple(factor), N)
            phase += p
        bucket = acc.setdefault(current, {})
        m = ctx.M
        for k, c in a.conj().terms:
            e = (k + phase * step) % m
            bucket[e] = bucket.get(e, 0) + c
    return Element.from_raw(ctx, x.n, acc)


def constant_term(x: Element) -> Cyclo:
    """Coefficient of the identity monomial."""
    return x.coefficient(identity_monomial(x.n))


def charge_decompose(x: Element) -> List[Element]:
    """Sector j collects the monomials with Σ r_i ≡ j (mod N)."""
    sectors: List[Dict[Monomial, Cyclo]] = [{} for _ in range(x.N)]
    for r, c in x.terms.items():
        sectors[charge(r, x.N)][r] = c
    return [Element(x.ctx, x.n, terms) for terms in sectors]


def charge_apply(x: Element) -> Element:
    """The charge operator C: each monomial scaled by q^{Σ r_i}."""
    ctx = x.ctx
    return Element(ctx, x.n, {r: c.mul_root(charge(r, x.N) * ctx.q_step) for r, c in x.terms.items()})


def is_neutral(x: Element) -> bool:
    return all(charge(r, x.N) == 0 for r in x.terms)


def elements_equal(x: Element, y: Element) -> bool:
    """Coefficient-wise equality under the context's backend."""
    check_compatible(x, y)
    if x.ctx.backend == "exact":
        return x.terms == y.terms
    ctx = x.ctx
    for r in set(x.terms) | set(y.terms):
        if not ctx.equal(x.coefficient(r), y.coefficient(r)):
            return False
    return True


def format_element(x: Element) -> str:
    """Normal form as text, one signed term per monomial in lexicographic order."""
    if not x.terms:
        return "0"
    parts = []
    for r, c in x.terms.items():
        scalar = x.ctx.format_scalar(c)
        word = format_monomial(r)
        if word == "1":
            parts.append(scalar)
        elif scalar == "1":
            parts.append(word)
        elif scalar == "-1":
            parts.append(f"-{word}")
        else:
            parts.append(f"{scalar}*{word}")
    return " + ".join(parts)
