#!/usr/bin/env python3
"""
Matrix Representation - Clock/shift matrices for C_{2n}^{(N)} on (C^N)^{⊗n}.

With Z e_a = q^a e_a and X e_a = e_{a+1}:
    g_{2j-1} = X at site j,                 Z at every later site
    g_{2j}   = ζ^{-1} X Z^{-1} at site j,   Z at every later site
Sites before j carry the identity. The ground vector is e_0 ⊗ ... ⊗ e_0.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import get_config
from errors import GCAError, PreconditionError, RepBudgetError
from braids.word import BraidWord, check_pair
from clifford.element import Element
from clifford.monomial import Monomial
from scalars.context import ScalarContext
from states.state import State, all_kets

logger = logging.getLogger(__name__)


def np_kron_n(mats: Sequence[np.ndarray]) -> np.ndarray:
    """Kronecker product of a list of matrices, first factor most significant."""
    out = np.eye(1, dtype=np.complex128)
    for m in mats:
        out = np.kron(out, m)
    return out


def clock_matrix(N: int) -> np.ndarray:
    return np.diag(np.exp(2j * np.pi * np.arange(N) / N))


def shift_matrix(N: int) -> np.ndarray:
    return np.roll(np.eye(N, dtype=np.complex128), 1, axis=0)


@dataclass
class RepContext:
    """Dense matrices realizing the generators, projectors and ground state."""
    ctx: ScalarContext
    n: int
    dim: int
    generators: List[np.ndarray]
    projectors: List[np.ndarray]
    ground: np.ndarray
    basis: np.ndarray = field(repr=False)  # column i is |a⟩ for the i-th ket in lexicographic order
    tolerance: float = 1e-12
    _powers: Dict[Tuple[int, int], np.ndarray] = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return self.ctx.N

    def generator_power(self, i: int, p: int) -> np.ndarray:
        """g_i^p with p reduced mod N."""
        p %= self.N
        key = (i, p)
        if key not in self._powers:
            self._powers[key] = np.linalg.matrix_power(self.generators[i - 1], p)
        return self._powers[key]

    def monomial_matrix(self, r: Monomial) -> np.ndarray:
        out = np.eye(self.dim, dtype=np.complex128)
        for i, p in enumerate(r, start=1):
            if p:
                out = out @ self.generator_power(i, p)
        return out

    def ket_index(self, a: Sequence[int]) -> int:
        index = 0
        for x in a:
            index = index * self.N + (x % self.N)
        return index


def build_rep(ctx: ScalarContext, n: int, max_dim: Optional[int] = None,
              tolerance: Optional[float] = None) -> RepContext:
    """
    Build and verify the matrix representation.

    Args:
        ctx: Scalar context (supplies N and the ζ branch)
        n: Number of qudits
        max_dim: Dimension budget (defaults to configuration)
        tolerance: Build-time axiom tolerance (defaults to configuration)

    Raises:
        RepBudgetError: N^n exceeds the budget
        GCAError: a representation axiom fails at build time
    """
    config = get_config()
    max_dim = max_dim or config.rep.max_dim
    tolerance = tolerance or config.rep.build_tolerance
    N = ctx.N
    if n < 1:
        raise PreconditionError(f"number of qudits n must be >= 1, got {n}")
    dim = N ** n
    if dim > max_dim:
        raise RepBudgetError(f"representation dimension {N}^{n} = {dim} exceeds budget {max_dim}")

    logger.info(f"Building matrix representation N={N}, n={n}, dim={dim}")
    zeta = complex(ctx.zeta)
    Z = clock_matrix(N)
    X = shift_matrix(N)
    identity_site = np.eye(N, dtype=np.complex128)
    even_site = (X @ np.linalg.inv(Z)) / zeta

    generators: List[np.ndarray] = []
    for j in range(1, n + 1):
        tail = [Z] * (n - j)
        head = [identity_site] * (j - 1)
        generators.append(np_kron_n(head + [X] + tail))
        generators.append(np_kron_n(head + [even_site] + tail))

    ground_site = np.zeros((N, N), dtype=np.complex128)
    ground_site[0, 0] = 1
    projectors = [np_kron_n([identity_site] * (k - 1) + [ground_site] + [identity_site] * (n - k))
                  for k in range(1, n + 1)]

    ground = np.zeros(dim, dtype=np.complex128)
    ground[0] = 1

    rc = RepContext(ctx=ctx, n=n, dim=dim, generators=generators, projectors=projectors,
                    ground=ground, basis=np.zeros((dim, dim), dtype=np.complex128),
                    tolerance=tolerance)
    for column, a in enumerate(all_kets(n, N)):
        vector = ground
        for k in range(n, 0, -1):
            vector = rc.generator_power(2 * k, a[k - 1]) @ vector
        rc.basis[:, column] = vector

    failures = verify_rep(rc)
    if failures:
        raise GCAError(f"representation axioms failed: {'; '.join(failures)}")
    logger.info(f"Representation axioms verified to {tolerance:g}")
    return rc


def verify_rep(rc: RepContext) -> List[str]:
    """All representation axioms; returns a list of failure messages."""
    tol = rc.tolerance
    q = np.exp(2j * np.pi / rc.N)
    zeta = complex(rc.ctx.zeta)
    eye = np.eye(rc.dim)
    failures = []
    gens = rc.generators
    for i in range(len(gens)):
        g = gens[i]
        if not np.allclose(g @ g.conj().T, eye, atol=tol):
            failures.append(f"g{i + 1} not unitary")
        if not np.allclose(np.linalg.matrix_power(g, rc.N), eye, atol=tol):
            failures.append(f"g{i + 1}^N != 1")
        for j in range(i + 1, len(gens)):
            if not np.allclose(g @ gens[j], q * gens[j] @ g, atol=tol):
                failures.append(f"g{i + 1} g{j + 1} != q g{j + 1} g{i + 1}")
    for k in range(1, rc.n + 1):
        odd, even = gens[2 * k - 2], gens[2 * k - 1]
        if not np.allclose(odd @ rc.ground, zeta * even @ rc.ground, atol=tol):
            failures.append(f"ground identity fails at site {k}")
        proj = rc.projectors[k - 1]
        if not np.allclose(odd @ proj, zeta * even @ proj, atol=tol):
            failures.append(f"projector identity fails at site {k}")
    gram = rc.basis.conj().T @ rc.basis
    if not np.allclose(gram, eye, atol=tol):
        failures.append("basis kets are not orthonormal")
    return failures


# =============================================================================
# SYMBOLIC -> NUMERIC
# =============================================================================

def elem_to_matrix(x: Element, rc: RepContext) -> np.ndarray:
    """Linear extension over monomials."""
    if x.N != rc.N or x.n != rc.n:
        raise PreconditionError("element and representation sizes differ")
    out = np.zeros((rc.dim, rc.dim), dtype=np.complex128)
    for r, c in x.terms.items():
        out += complex(c) * rc.monomial_matrix(r)
    return out


def braid_matrix(k: int, l: int, rc: RepContext) -> np.ndarray:
    """(ω^{±1/2}/√N) Σ g_k^i g_l^{-i}, built straight from the matrices."""
    check_pair(k, l, rc.n)
    half = rc.ctx.omega_sqrt if k < l else rc.ctx.omega_sqrt.conj()
    prefactor = complex(half) / np.sqrt(rc.N)
    out = np.zeros((rc.dim, rc.dim), dtype=np.complex128)
    for i in range(rc.N):
        out += rc.generator_power(k, i) @ rc.generator_power(l, -i)
    return prefactor * out


def word_to_matrix(word: BraidWord, rc: RepContext) -> np.ndarray:
    out = np.eye(rc.dim, dtype=np.complex128)
    for k, l in word.factors:
        out = out @ braid_matrix(k, l, rc)
    return out


def state_to_vector(s: State, rc: RepContext) -> np.ndarray:
    """Coordinates of s in the standard basis."""
    if s.N != rc.N or s.n != rc.n:
        raise PreconditionError("state and representation sizes differ")
    vector = np.zeros(rc.dim, dtype=np.complex128)
    for a, c in s.coeffs.items():
        vector += complex(c) * rc.basis[:, rc.ket_index(a)]
    return vector
