#!/usr/bin/env python3
"""
States - Vectors over the orthonormal basis |a⟩ = c_2^{a_1} c_4^{a_2} ... c_{2n}^{a_n} |Ω⟩.

Generator action on a basis ket (S_k = Σ_{i<k} a_i):
    c_{2k}   |a⟩ = q^{-S_k}             |a + e_k⟩
    c_{2k-1} |a⟩ = ζ · q^{a_k - S_k}    |a + e_k⟩
Projectors E_k keep exactly the kets with a_k = 0.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from errors import BackendMismatchError, IndexRangeError, PreconditionError
from braids.word import BraidWord, braid_element
from clifford.element import Element, adjoint as element_adjoint
from clifford.monomial import Monomial
from scalars.context import ScalarContext
from scalars.cyclotomic import Cyclo, mul_raw

logger = logging.getLogger(__name__)

Ket = Tuple[int, ...]


class State:
    """
    Sparse exact state Σ coeff(a)|a⟩ over charge vectors a ∈ (Z_N)^n.

    Treat as immutable; zero coefficients are never stored.
    """

    __slots__ = ("ctx", "n", "coeffs")

    def __init__(self, ctx: ScalarContext, n: int, coeffs: Optional[Mapping[Ket, Cyclo]] = None):
        if n < 1:
            raise PreconditionError(f"number of qudits n must be >= 1, got {n}")
        self.ctx = ctx
        self.n = n
        cleaned = {tuple(a): c for a, c in (coeffs or {}).items() if not c.is_zero()}
        self.coeffs: Dict[Ket, Cyclo] = dict(sorted(cleaned.items()))

    @property
    def N(self) -> int:
        return self.ctx.N

    @classmethod
    def from_raw(cls, ctx: ScalarContext, n: int, raw: Mapping[Ket, Mapping[int, Fraction]]) -> "State":
        field = ctx.field
        return cls(ctx, n, {a: field.reduce(c) for a, c in raw.items()})

    def coefficient(self, a: Sequence[int]) -> Cyclo:
        return self.coeffs.get(tuple(x % self.N for x in a), self.ctx.zero())

    def __add__(self, other: "State") -> "State":
        _check_states(self, other)
        coeffs = dict(self.coeffs)
        for a, c in other.coeffs.items():
            coeffs[a] = coeffs[a] + c if a in coeffs else c
        return State(self.ctx, self.n, coeffs)

    def __neg__(self) -> "State":
        return State(self.ctx, self.n, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other: "State") -> "State":
        return self + (-other)

    def __rmul__(self, alpha):
        if isinstance(alpha, (Cyclo, int, Fraction)):
            alpha = self.ctx.scalar(alpha)
            return State(self.ctx, self.n, {a: alpha * c for a, c in self.coeffs.items()})
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, State):
            return NotImplemented
        return self.n == other.n and self.N == other.N and self.coeffs == other.coeffs

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self) -> str:
        return f"State(N={self.N}, n={self.n}, kets={len(self.coeffs)})"

    def __str__(self) -> str:
        return format_state(self)


def _check_states(s1: State, s2: State):
    if s1.N != s2.N or s1.n != s2.n:
        raise PreconditionError(
            f"states from different spaces: (N={s1.N}, n={s1.n}) vs (N={s2.N}, n={s2.n})")
    if s1.ctx.backend != s2.ctx.backend:
        raise BackendMismatchError(
            f"cannot combine {s1.ctx.backend} and {s2.ctx.backend} backend states")


# =============================================================================
# CONSTRUCTORS
# =============================================================================

def ground(ctx: ScalarContext, n: int) -> State:
    """|Ω⟩^{⊗n}: the a = 0 ket."""
    return State(ctx, n, {(0,) * n: ctx.one()})


def basis_ket(ctx: ScalarContext, n: int, a: Sequence[int]) -> State:
    if len(a) != n:
        raise PreconditionError(f"ket label needs {n} entries, got {len(a)}")
    return State(ctx, n, {tuple(x % ctx.N for x in a): ctx.one()})


def all_kets(n: int, N: int) -> Iterator[Ket]:
    return product(range(N), repeat=n)


# =============================================================================
# ACTIONS
# =============================================================================

def _act_monomial(r: Monomial, a: Ket, ctx: ScalarContext) -> Tuple[int, Ket]:
    """
    c^r |a⟩ = ζ_M^phase |a'⟩, applying c_{2n}^{r_{2n}} first.

    Powers use the closed forms
        c_{2k}^p   |a⟩ = q^{-p S_k} |a + p e_k⟩
        c_{2k-1}^p |a⟩ = ζ^p q^{p a_k + p(p-1)/2 - p S_k} |a + p e_k⟩.
    """
    N = ctx.N
    q_step = ctx.q_step
    zeta_step = ctx.zeta_step
    labels = list(a)
    phase = 0
    for j in range(len(r), 0, -1):
        p = r[j - 1]
        if not p:
            continue
        k = (j + 1) // 2
        prefix = sum(labels[:k - 1])
        if j % 2 == 0:
            phase -= q_step * p * prefix
        else:
            phase += zeta_step * p + q_step * (p * labels[k - 1] + p * (p - 1) // 2 - p * prefix)
        labels[k - 1] = (labels[k - 1] + p) % N
    return phase % ctx.M, tuple(labels)


def apply_generator(j: int, s: State, power: int = 1) -> State:
    """c_j^power · s."""
    if not 1 <= j <= 2 * s.n:
        raise IndexRangeError(f"generator index {j} outside 1..{2 * s.n}")
    exps = [0] * (2 * s.n)
    exps[j - 1] = power % s.N
    return _apply_terms({tuple(exps): s.ctx.one()}, s)


def apply_projector(k: int, s: State) -> State:
    """E_k · s: drop every ket with a_k != 0."""
    if not 1 <= k <= s.n:
        raise IndexRangeError(f"projector index {k} outside 1..{s.n}")
    return State(s.ctx, s.n, {a: c for a, c in s.coeffs.items() if a[k - 1] == 0})


def _apply_terms(terms: Mapping[Monomial, Cyclo], s: State) -> State:
    ctx = s.ctx
    acc: Dict[Ket, Dict[int, Fraction]] = {}
    for r, x in terms.items():
        for a, v in s.coeffs.items():
            phase, target = _act_monomial(r, a, ctx)
            bucket = acc.get(target)
            if bucket is None:
                bucket = acc[target] = {}
            mul_raw(x, v, phase, bucket)
    return State.from_raw(ctx, s.n, acc)


def apply_element(x: Element, s: State) -> State:
    """x · s, monomials applied generator by generator (rightmost first)."""
    if x.N != s.N or x.n != s.n:
        raise PreconditionError(f"element (N={x.N}, n={x.n}) cannot act on state (N={s.N}, n={s.n})")
    if x.ctx.backend != s.ctx.backend:
        raise BackendMismatchError("element and state use different backends")
    return _apply_terms(x.terms, s)


def apply_word(word: BraidWord, s: State) -> State:
    """Apply a braid word, rightmost factor first."""
    for k, l in reversed(word.factors):
        s = apply_element(braid_element(k, l, s.ctx, s.n), s)
    return s


def inner(s1: State, s2: State) -> Cyclo:
    """⟨s1|s2⟩, conjugate-linear in s1."""
    _check_states(s1, s2)
    total = s1.ctx.zero()
    for a, c in s1.coeffs.items():
        other = s2.coeffs.get(a)
        if other is not None:
            total = total + c.conj() * other
    return total


def vev(x: Element) -> Cyclo:
    """⟨Ω|x|Ω⟩."""
    return apply_element(x, ground(x.ctx, x.n)).coefficient((0,) * x.n)


def states_equal(s1: State, s2: State) -> bool:
    """Coefficient-wise equality under the context's backend."""
    _check_states(s1, s2)
    if s1.ctx.backend == "exact":
        return s1.coeffs == s2.coeffs
    ctx = s1.ctx
    return all(ctx.equal(s1.coefficient(a), s2.coefficient(a)) for a in set(s1.coeffs) | set(s2.coeffs))


def charges(s: State) -> List[int]:
    """Distinct Σ a_i mod N over the kets in s."""
    return sorted({sum(a) % s.N for a in s.coeffs})


def format_state(s: State) -> str:
    if not s.coeffs:
        return "0"
    parts = []
    for a, c in s.coeffs.items():
        label = "|" + ",".join(str(x) for x in a) + ">"
        scalar = s.ctx.format_scalar(c)
        if scalar == "1":
            parts.append(label)
        elif scalar == "-1":
            parts.append(f"-{label}")
        else:
            parts.append(f"{scalar}*{label}")
    return " + ".join(parts)


# =============================================================================
# STATE OPERATORS
# =============================================================================

@dataclass(frozen=True)
class GeneratorAtom:
    index: int
    exponent: int = 1


@dataclass(frozen=True)
class ProjectorAtom:
    index: int


@dataclass(frozen=True)
class ElementAtom:
    element: Element


@dataclass(frozen=True)
class WordAtom:
    word: BraidWord


Atom = Union[GeneratorAtom, ProjectorAtom, ElementAtom, WordAtom]


@dataclass(frozen=True)
class StateOp:
    """
    Operator on states: Σ scalar · (atom_1 atom_2 ... atom_m), atoms applied right to left.

    Needed because E_k acts on states only and has no algebra Element.
    """
    terms: Tuple[Tuple[Cyclo, Tuple[Atom, ...]], ...]

    @classmethod
    def sequence(cls, ctx: ScalarContext, atoms: Sequence[Atom]) -> "StateOp":
        return cls(((ctx.one(), tuple(atoms)),))

    def __mul__(self, other: "StateOp") -> "StateOp":
        return StateOp(tuple((a * b, left + right)
                             for a, left in self.terms for b, right in other.terms))

    def __add__(self, other: "StateOp") -> "StateOp":
        return StateOp(self.terms + other.terms)

    def scaled(self, alpha: Cyclo) -> "StateOp":
        return StateOp(tuple((alpha * c, atoms) for c, atoms in self.terms))

    def adjoint(self) -> "StateOp":
        flipped = []
        for c, atoms in self.terms:
            reversed_atoms = []
            for atom in reversed(atoms):
                if isinstance(atom, GeneratorAtom):
                    reversed_atoms.append(GeneratorAtom(atom.index, -atom.exponent))
                elif isinstance(atom, ProjectorAtom):
                    reversed_atoms.append(atom)
                elif isinstance(atom, ElementAtom):
                    reversed_atoms.append(ElementAtom(element_adjoint(atom.element)))
                else:
                    reversed_atoms.append(WordAtom(atom.word.adjoint()))
            flipped.append((c.conj(), tuple(reversed_atoms)))
        return StateOp(tuple(flipped))


def apply_atom(atom: Atom, s: State) -> State:
    if isinstance(atom, GeneratorAtom):
        return apply_generator(atom.index, s, atom.exponent)
    if isinstance(atom, ProjectorAtom):
        return apply_projector(atom.index, s)
    if isinstance(atom, ElementAtom):
        return apply_element(atom.element, s)
    return apply_word(atom.word.validate(s.n), s)


def apply_stateop(op: StateOp, s: State) -> State:
    result = State(s.ctx, s.n)
    for scalar, atoms in op.terms:
        current = s
        for atom in reversed(atoms):
            current = apply_atom(atom, current)
        result = result + scalar * current
    return result
