#!/usr/bin/env python3
"""
Cyclotomic Arithmetic - Exact arithmetic in the M-th cyclotomic field Q(ζ_M).

Elements are stored in canonical form: the remainder of their polynomial in
ζ_M modulo the cyclotomic polynomial Φ_M, as a sparse, index-sorted tuple of
(exponent, Fraction) pairs. Two values are equal iff their canonical forms
agree, which is exactly the statement that their difference vanishes modulo
Φ_M.

Reduction uses a per-field table holding the canonical form of every power
ζ_M^k (k < M); products are accumulated as raw exponent sums modulo M and
reduced once.
"""

import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import mpmath

from config import get_config
from errors import ScalarError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
Terms = Tuple[Tuple[int, Fraction], ...]


# =============================================================================
# CYCLOTOMIC POLYNOMIALS
# =============================================================================

def _divisors(m: int) -> List[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def _divide_exact(numerator: Sequence[int], denominator: Sequence[int]) -> List[int]:
    """Exact division of integer polynomials (low to high), monic denominator."""
    num = list(numerator)
    deg = len(denominator) - 1
    if denominator[-1] != 1:
        raise ScalarError("cyclotomic division requires a monic divisor")
    quotient = [0] * (len(num) - deg)
    sparse_den = [(j, c) for j, c in enumerate(denominator[:-1]) if c]
    for i in range(len(num) - 1, deg - 1, -1):
        c = num[i]
        if not c:
            continue
        quotient[i - deg] = c
        num[i] = 0
        for j, d in sparse_den:
            num[i - deg + j] -= c * d
    if any(num[:deg]):
        raise ScalarError("non-exact polynomial division while building Φ")
    return quotient


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """
    Φ_m as integer coefficients, lowest degree first.

    Computed by dividing x^m - 1 by Φ_d for every proper divisor d of m.
    """
    if m < 1:
        raise ScalarError(f"cyclotomic index must be positive, got {m}")
    poly = [-1] + [0] * (m - 1) + [1]
    for d in _divisors(m)[:-1]:
        poly = _divide_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


# =============================================================================
# FIELD
# =============================================================================

class CyclotomicField:
    """
    The field Q(ζ_M) with a precomputed reduction table.

    Use get_field(M) rather than constructing directly; fields are shared.
    """

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ScalarError(f"modulus must be positive, got {modulus}")
        self.M = modulus
        self.phi = cyclotomic_polynomial(modulus)
        self.degree = len(self.phi) - 1
        self._table = self._build_table()
        logger.debug(f"Built Q(ζ_{modulus}): deg Φ = {self.degree}, "
                     f"{sum(1 for c in self.phi if c)} nonzero coefficients")

    def _build_table(self) -> List[Tuple[Tuple[int, int], ...]]:
        """Canonical form of ζ^k for k = 0..M-1."""
        d = self.degree
        tail = [(i, -c) for i, c in enumerate(self.phi[:-1]) if c]
        table: List[Tuple[Tuple[int, int], ...]] = [((k, 1),) for k in range(min(d, self.M))]
        for k in range(d, self.M):
            acc: Dict[int, int] = {}
            for e, c in table[k - 1]:
                if e + 1 < d:
                    acc[e + 1] = acc.get(e + 1, 0) + c
                else:
                    for i, t in tail:
                        acc[i] = acc.get(i, 0) + c * t
            table.append(tuple(sorted((e, c) for e, c in acc.items() if c)))
        return table

    def __repr__(self) -> str:
        return f"CyclotomicField(M={self.M})"

    # -------------------------------------------------------------------------
    # Construction
    # -------------------------------------------------------------------------

    def reduce(self, raw: Mapping[int, Rational]) -> "Cyclo":
        """Canonical element from raw coefficients of ζ^k (k taken mod M)."""
        acc: Dict[int, Fraction] = {}
        table = self._table
        m = self.M
        for k, c in raw.items():
            if not c:
                continue
            for e, t in table[k % m]:
                acc[e] = acc.get(e, 0) + c * t
        terms = tuple(sorted((e, Fraction(c)) for e, c in acc.items() if c))
        return Cyclo(self, terms)

    def zero(self) -> "Cyclo":
        return Cyclo(self, ())

    def one(self) -> "Cyclo":
        return self.rational(1)

    def rational(self, value: Rational) -> "Cyclo":
        value = Fraction(value)
        return Cyclo(self, ((0, value),) if value else ())

    def root(self, k: int, coefficient: Rational = 1) -> "Cyclo":
        """coefficient · ζ_M^k."""
        return self.reduce({k % self.M: Fraction(coefficient)})

    def from_coeffs(self, coeffs: Iterable[Rational]) -> "Cyclo":
        """Element from a dense coefficient list (index k is the coefficient of ζ^k)."""
        return self.reduce({k: Fraction(c) for k, c in enumerate(coeffs) if c})


@lru_cache(maxsize=None)
def get_field(modulus: int) -> CyclotomicField:
    """Shared field instance for a modulus."""
    return CyclotomicField(modulus)


# =============================================================================
# ELEMENTS
# =============================================================================

class Cyclo:
    """
    Exact element of Q(ζ_M).

    Immutable; arithmetic returns new values. Integers and Fractions are
    accepted wherever a Cyclo is expected.
    """

    __slots__ = ("field", "terms", "_hash")

    def __init__(self, field: CyclotomicField, terms: Terms):
        self.field = field
        self.terms = terms
        self._hash: Optional[int] = None

    @property
    def M(self) -> int:
        return self.field.M

    @property
    def coeffs(self) -> List[Fraction]:
        """Dense length-M view of the canonical form."""
        dense = [Fraction(0)] * self.field.M
        for k, c in self.terms:
            dense[k] = c
        return dense

    # -------------------------------------------------------------------------
    # Helpers
    # -------------------------------------------------------------------------

    def _coerce(self, other) -> Optional["Cyclo"]:
        if isinstance(other, Cyclo):
            if other.field.M != self.field.M:
                raise ScalarError(f"modulus mismatch: {self.field.M} vs {other.field.M}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.rational(other)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def monomial(self) -> Optional[Tuple[int, Fraction]]:
        """(k, c) when the value is c·ζ^k with k below deg Φ, else None."""
        if len(self.terms) == 1:
            return self.terms[0]
        return None

    # -------------------------------------------------------------------------
    # Arithmetic
    # -------------------------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: Dict[int, Fraction] = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, 0) + c
        return Cyclo(self.field, tuple(sorted((k, c) for k, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo(self.field, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self.field.zero()
            return Cyclo(self.field, tuple((k, c * other) for k, c in self.terms))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field.reduce(mul_raw(self, other))

    __rmul__ = __mul__

    def mul_root(self, k: int) -> "Cyclo":
        """self · ζ_M^k."""
        m = self.field.M
        return self.field.reduce({(e + k) % m: c for e, c in self.terms})

    def conj(self) -> "Cyclo":
        """Complex conjugate: the automorphism ζ_M ↦ ζ_M^{-1}."""
        m = self.field.M
        return self.field.reduce({(-k) % m: c for k, c in self.terms})

    def galois(self, unit: int) -> "Cyclo":
        """Image under the automorphism ζ_M ↦ ζ_M^unit (unit coprime to M)."""
        m = self.field.M
        raw: Dict[int, Fraction] = {}
        for k, c in self.terms:
            e = (k * unit) % m
            raw[e] = raw.get(e, 0) + c
        return self.field.reduce(raw)

    def inv(self) -> "Cyclo":
        """
        Multiplicative inverse.

        Monomials c·ζ^k invert directly; otherwise the inverse is the product
        of the nontrivial Galois conjugates divided by the (rational) norm.
        """
        if self.is_zero():
            raise ScalarError("division by zero in cyclotomic field")
        mono = self.monomial()
        if mono is not None:
            k, c = mono
            return self.field.root(-k, 1 / c)
        conjugate = self.conj()
        modulus = self * conjugate
        if modulus.is_rational():
            return conjugate * (1 / modulus.rational_value())
        m = self.field.M
        product = self.field.one()
        for unit in range(2, m):
            if math.gcd(unit, m) == 1:
                product = product * self.galois(unit)
        norm = self * product
        if not norm.is_rational() or norm.is_zero():
            raise ScalarError("norm computation did not produce a nonzero rational")
        return product * (1 / norm.rational_value())

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ScalarError(f"{self!r} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ScalarError("division by zero in cyclotomic field")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self
        if exponent < 0:
            base = self.inv()
            exponent = -exponent
        result = self.field.one()
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # -------------------------------------------------------------------------
    # Comparison
    # -------------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Cyclo):
            return other.field.M == self.field.M and other.terms == self.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == self.field.rational(other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.M, self.terms))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -------------------------------------------------------------------------
    # Numerics and display
    # -------------------------------------------------------------------------

    def embed(self, precision: Optional[int] = None) -> mpmath.mpc:
        return embed_complex(self, precision)

    def __complex__(self) -> complex:
        return complex(embed_complex(self))

    def __repr__(self) -> str:
        return f"Cyclo(M={self.field.M}, terms={[(k, str(c)) for k, c in self.terms]})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms:
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(f"z^{k}")
            else:
                parts.append(f"({c})*z^{k}")
        return " + ".join(parts)


def mul_raw(x: Cyclo, y: Cyclo, shift: int = 0, into: Optional[Dict[int, Fraction]] = None) -> Dict[int, Fraction]:
    """
    Unreduced product x · y · ζ^shift, accumulated into ``into``.

    Lets callers sum many products and reduce once (see Element multiplication).
    """
    m = x.field.M
    acc = into if into is not None else {}
    for i, a in x.terms:
        for j, b in y.terms:
            e = (i + j + shift) % m
            acc[e] = acc.get(e, 0) + a * b
    return acc


# =============================================================================
# OPERATIONS
# =============================================================================

def add(x: Cyclo, y: Cyclo) -> Cyclo:
    return x + y


def mul(x: Cyclo, y: Cyclo) -> Cyclo:
    return x * y


def neg(x: Cyclo) -> Cyclo:
    return -x


def inv(x: Cyclo) -> Cyclo:
    return x.inv()


def conj(x: Cyclo) -> Cyclo:
    return x.conj()


def cyclo_eq(x: Cyclo, y: Cyclo, backend: str = "exact", tolerance: float = 1e-9) -> bool:
    """
    Equality test.

    The exact backend compares canonical forms modulo Φ_M; the float backend
    compares embeddings within ``tolerance``.
    """
    if x.field.M != y.field.M:
        raise ScalarError(f"modulus mismatch: {x.field.M} vs {y.field.M}")
    if backend == "float":
        return abs(complex(embed_complex(x - y))) < tolerance
    return x.terms == y.terms


@lru_cache(maxsize=64)
def _root_embeddings(modulus: int, precision: int) -> Tuple[mpmath.mpc, ...]:
    with mpmath.workprec(precision):
        return tuple(mpmath.expjpi(mpmath.mpf(2 * k) / modulus) for k in range(modulus))


def embed_complex(x: Cyclo, precision: Optional[int] = None) -> mpmath.mpc:
    """
    Numerical value of x at ζ_M = exp(2πi/M).

    Evaluated with ``precision`` plus guard bits so the result is accurate
    to 2^-precision relative to the exact value. ``precision`` defaults to
    GCA_EMBED_PRECISION.
    """
    if precision is None:
        precision = get_config().scalar.embed_precision
    guard = precision + 16 + max(x.field.M, 1).bit_length()
    roots = _root_embeddings(x.field.M, guard)
    with mpmath.workprec(guard):
        total = mpmath.mpc(0)
        for k, c in x.terms:
            total += roots[k] * mpmath.mpf(c.numerator) / c.denominator
    return total
