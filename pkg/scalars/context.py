#!/usr/bin/env python3
"""
Scalar Context - The exact constants of one qudit dimension N.

All scalars live in the ambient field Q(ζ_M) with M = 16·N², which holds
q, ζ, the Gauss-sum phase ω, its square root and √N at once.
"""

import logging
import math
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

import mpmath

from config import get_config
from errors import PreconditionError, RootOfUnityError
from scalars.cyclotomic import Cyclo, CyclotomicField, cyclo_eq, embed_complex, get_field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScalarContext:
    """Exact constants for dimension N plus the equality backend in use."""
    N: int
    M: int
    field: CyclotomicField
    q: Cyclo
    zeta: Cyclo
    omega: Cyclo
    omega_sqrt: Cyclo
    sqrtN: Cyclo
    omega_exponent: int  # ω = ζ_M^omega_exponent
    backend: str = "exact"
    tolerance: float = 1e-9

    def zero(self) -> Cyclo:
        return self.field.zero()

    def one(self) -> Cyclo:
        return self.field.one()

    def scalar(self, value) -> Cyclo:
        if isinstance(value, Cyclo):
            return value
        return self.field.rational(value)

    def q_power(self, exponent: int) -> Cyclo:
        """q^exponent as a root of unity."""
        return self.field.root(exponent * (self.M // self.N))

    def zeta_power(self, exponent: int) -> Cyclo:
        return self.field.root(exponent * 8 * self.N * (self.N + 1))

    @property
    def q_step(self) -> int:
        """Exponent of ζ_M that equals q."""
        return self.M // self.N

    @property
    def zeta_step(self) -> int:
        """Exponent of ζ_M that equals ζ."""
        return (8 * self.N * (self.N + 1)) % self.M

    @property
    def inv_sqrtN(self) -> Cyclo:
        return self.sqrtN * Fraction(1, self.N)

    def equal(self, x: Cyclo, y: Cyclo) -> bool:
        return cyclo_eq(x, y, self.backend, self.tolerance)

    def is_zero(self, x: Cyclo) -> bool:
        if self.backend == "float":
            return abs(complex(x)) < self.tolerance
        return x.is_zero()

    def with_backend(self, backend: str, tolerance: float = 1e-9) -> "ScalarContext":
        """Same constants under another equality backend."""
        return ScalarContext(self.N, self.M, self.field, self.q, self.zeta, self.omega,
                             self.omega_sqrt, self.sqrtN, self.omega_exponent, backend, tolerance)

    def describe(self) -> str:
        return (f"N={self.N}, M={self.M}, ω=ζ_M^{self.omega_exponent}, "
                f"backend={self.backend}")

    def root_exponent(self, x: Cyclo) -> Optional[Tuple[int, Fraction]]:
        """(k, c) with x = c·ζ_M^k when x is a rational multiple of a root of unity."""
        if x.is_zero():
            return None
        table = _root_lookup(self.M)
        lead = x.terms[0][1]
        for c in (lead, -lead):
            key = tuple((e, v / c) for e, v in x.terms)
            if key in table:
                return table[key], c
        return None

    def format_scalar(self, x: Cyclo) -> str:
        """Short text for a scalar: rationals, q^j, zeta^j, or the reduced ζ_M form."""
        if x.is_rational():
            return str(x.rational_value())
        found = self.root_exponent(x)
        if found is None:
            return f"({x})"
        k, c = found
        # c·ζ^k = (-c)·ζ^{k+M/2}; positive coefficient first
        readings = sorted([(k, c), ((k + self.M // 2) % self.M, -c)], key=lambda r: r[1] < 0)
        for k, c in readings:
            if k % self.q_step == 0:
                return _power_text(c, "q", k // self.q_step)
        half = self.q_step // 2
        if math.gcd(self.N + 1, 2 * self.N) == 1:
            inverse = pow(self.N + 1, -1, 2 * self.N)
            for k, c in readings:
                if k % half == 0:
                    return _power_text(c, "zeta", (k // half) * inverse % (2 * self.N))
        k, c = readings[0]
        return f"{_coefficient_prefix(c)}exp(2pi*i*{Fraction(k, self.M)})"


def _coefficient_prefix(c: Fraction) -> str:
    return "" if c == 1 else ("-" if c == -1 else f"{c}*")


def _power_text(c: Fraction, name: str, j: int) -> str:
    if j == 0:
        return str(c)
    return f"{_coefficient_prefix(c)}{name}" if j == 1 else f"{_coefficient_prefix(c)}{name}^{j}"


@lru_cache(maxsize=16)
def _root_lookup(modulus: int) -> Dict[Tuple[Tuple[int, Fraction], ...], int]:
    field = get_field(modulus)
    return {field.root(k).terms: k for k in range(modulus)}


def _identify_omega(field: CyclotomicField, omega_prime: Cyclo, N: int) -> int:
    """
    Exponent t with ζ_M^t = ω′/√N.

    The candidate comes from the numerical argument of ω′; it must satisfy
    ζ_M^{2t} = ω′²/N exactly or identification fails.
    """
    m = field.M
    omega_squared = (omega_prime * omega_prime) / N
    value = embed_complex(omega_prime)
    angle = float(mpmath.arg(value))
    guess = round(angle * m / (2 * math.pi)) % m
    for t in (guess, (guess + 1) % m, (guess - 1) % m):
        if field.root(2 * t) != omega_squared:
            continue
        numeric = complex(embed_complex(field.root(t)))
        target = complex(value) / abs(complex(value))
        if abs(numeric - target) < 1e-9:
            return t
    raise RootOfUnityError(
        f"Gauss-sum phase for N={N} is not a power of ζ_{m}; use the float backend")


@lru_cache(maxsize=None)
def _build_constants(N: int) -> ScalarContext:
    M = 16 * N * N
    field = get_field(M)
    logger.info(f"Building scalar context for N={N} in Q(ζ_{M})")

    zeta_step = (8 * N * (N + 1)) % M
    zeta = field.root(zeta_step)
    q = field.root(M // N)
    omega_prime = field.reduce(_gauss_raw(zeta_step, N, M))

    t = _identify_omega(field, omega_prime, N)
    omega = field.root(t)
    sqrtN = omega_prime * omega.conj()

    # principal branch: argument of ω taken in (-π, π]
    t_signed = t if t <= M // 2 else t - M
    if t_signed % 2:
        raise RootOfUnityError(f"ω = ζ_{M}^{t} has no square root in Q(ζ_{M})")
    omega_sqrt = field.root(t_signed // 2)

    ctx = ScalarContext(N=N, M=M, field=field, q=q, zeta=zeta, omega=omega,
                        omega_sqrt=omega_sqrt, sqrtN=sqrtN, omega_exponent=t)
    _check_invariants(ctx)
    logger.info(f"Scalar context ready: ω = ζ_{M}^{t}")
    return ctx


def _gauss_raw(zeta_step: int, N: int, M: int) -> dict:
    raw: dict = {}
    for i in range(N):
        k = (zeta_step * i * i) % M
        raw[k] = raw.get(k, 0) + 1
    return raw


def _check_invariants(ctx: ScalarContext):
    problems = []
    if ctx.zeta * ctx.zeta != ctx.q:
        problems.append("zeta^2 != q")
    if ctx.zeta ** (ctx.N * ctx.N) != ctx.one():
        problems.append("zeta^(N^2) != 1")
    if ctx.omega * ctx.omega.conj() != ctx.one():
        problems.append("|omega| != 1")
    if ctx.omega_sqrt * ctx.omega_sqrt != ctx.omega:
        problems.append("omega_sqrt^2 != omega")
    if ctx.sqrtN * ctx.sqrtN != ctx.N:
        problems.append("sqrtN^2 != N")
    embedded = complex(embed_complex(ctx.sqrtN))
    if embedded.real <= 0 or abs(embedded.imag) > 1e-9:
        problems.append(f"sqrtN embeds to {embedded}, not a positive real")
    if problems:
        raise RootOfUnityError(f"scalar context for N={ctx.N} failed: {', '.join(problems)}")


def context_new(N: int, backend: Optional[str] = None, tolerance: Optional[float] = None) -> ScalarContext:
    """
    Build (or fetch) the scalar context for qudit dimension N.

    Args:
        N: Qudit dimension, at least 2
        backend: "exact" or "float" equality (default: GCA_BACKEND, else exact)
        tolerance: Float backend tolerance (default: GCA_FLOAT_TOLERANCE)

    Returns:
        ScalarContext satisfying all its invariants

    Raises:
        PreconditionError: N < 2 or unknown backend
        RootOfUnityError: ω could not be identified exactly
    """
    scalar_config = get_config().scalar
    backend = backend or scalar_config.backend or "exact"
    tolerance = scalar_config.float_tolerance if tolerance is None else tolerance
    if not isinstance(N, int) or N < 2:
        raise PreconditionError(f"qudit dimension N must be an integer >= 2, got {N}")
    if backend not in ("exact", "float"):
        raise PreconditionError(f"unknown backend '{backend}'")
    ctx = _build_constants(N)
    if backend == "exact":
        return ctx
    return ctx.with_backend(backend, tolerance)
