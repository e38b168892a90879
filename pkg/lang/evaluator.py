#!/usr/bin/env python3
"""
Evaluator - Turn parsed expressions into scalars, Elements or States.

Intermediate values may also be StateOps (anything containing a projector
E[k]); a StateOp must be applied to |vac> before evaluation ends.
"""

import logging
from dataclasses import dataclass
from typing import Optional, Union

from errors import ContextMisuseError, EvaluationError, IndexRangeError, PreconditionError
from braids.word import braid_element, check_pair
from clifford.element import Element, adjoint, from_scalar, generator, scale
from lang.parser import (
    Adjoint,
    BinOp,
    Braid,
    Expr,
    Gen,
    Neg,
    Number,
    Power,
    Proj,
    Symbol,
    Vac,
    parse_text,
)
from scalars.context import ScalarContext, context_new
from scalars.cyclotomic import Cyclo
from states.state import (
    ElementAtom,
    ProjectorAtom,
    State,
    StateOp,
    apply_element,
    apply_stateop,
    ground,
)

logger = logging.getLogger(__name__)

Value = Union[Cyclo, Element, StateOp, State]


@dataclass
class CommandConfig:
    """Settings shared by every expression-level command."""
    N: int
    n: int
    backend: str = "exact"
    output_format: str = "text"  # text or json
    output_path: Optional[str] = None

    def __post_init__(self):
        if self.N < 2 or self.n < 1:
            raise PreconditionError(f"need N >= 2 and n >= 1, got N={self.N}, n={self.n}")
        if self.output_format not in ("text", "json"):
            raise PreconditionError(f"unknown output format '{self.output_format}'")

    def context(self) -> ScalarContext:
        return context_new(self.N, backend=self.backend)


class Evaluator:
    """Evaluates an expression tree for one (N, n) and scalar context."""

    def __init__(self, ctx: ScalarContext, n: int):
        self.ctx = ctx
        self.n = n

    # -------------------------------------------------------------------------
    # Promotion helpers
    # -------------------------------------------------------------------------

    def to_element(self, value: Value) -> Element:
        if isinstance(value, Cyclo):
            return from_scalar(self.ctx, self.n, value)
        return value

    def to_stateop(self, value: Value) -> StateOp:
        if isinstance(value, StateOp):
            return value
        if isinstance(value, Cyclo):
            return StateOp(((value, ()),))
        return StateOp.sequence(self.ctx, [ElementAtom(value)])

    # -------------------------------------------------------------------------
    # Evaluation
    # -------------------------------------------------------------------------

    def evaluate(self, node: Expr) -> Value:
        value = self.visit(node)
        if isinstance(value, StateOp):
            raise ContextMisuseError("projector E[k] used outside a vacuum-applied expression")
        return value

    def visit(self, node: Expr) -> Value:
        method = getattr(self, f"visit_{type(node).__name__.lower()}", None)
        if method is None:
            raise EvaluationError(f"cannot evaluate node {node!r}")
        return method(node)

    def visit_number(self, node: Number) -> Value:
        return self.ctx.scalar(node.value)

    def visit_symbol(self, node: Symbol) -> Value:
        ctx = self.ctx
        return {
            "q": ctx.q,
            "zeta": ctx.zeta,
            "omega": ctx.omega,
            "omegaSqrt": ctx.omega_sqrt,
            "sqrtN": ctx.sqrtN,
        }[node.name]

    def visit_gen(self, node: Gen) -> Value:
        return generator(self.ctx, self.n, node.index)

    def visit_proj(self, node: Proj) -> Value:
        if not 1 <= node.index <= self.n:
            raise IndexRangeError(f"projector index {node.index} outside 1..{self.n}")
        return StateOp.sequence(self.ctx, [ProjectorAtom(node.index)])

    def visit_braid(self, node: Braid) -> Value:
        check_pair(node.k, node.l, self.n)
        return braid_element(node.k, node.l, self.ctx, self.n)

    def visit_power(self, node: Power) -> Value:
        e = node.exponent
        if e < 0 and isinstance(node.base, Braid):
            # b_kl^{-1} = b_lk
            return self.visit(Power(Braid(node.base.l, node.base.k), -e))
        if e < 0 and isinstance(node.base, Gen):
            return generator(self.ctx, self.n, node.base.index, e)
        base = self.visit(node.base)
        if isinstance(base, Cyclo):
            if base.is_zero() and e < 0:
                raise EvaluationError("negative power of zero")
            return base ** e
        if isinstance(base, Element):
            if e >= 0:
                return base ** e
            return self._invert_monomial(base) ** (-e)
        if isinstance(base, StateOp):
            if e < 0:
                raise EvaluationError("negative powers of operators with projectors are undefined")
            result = self.to_stateop(self.ctx.one())
            for _ in range(e):
                result = result * base
            return result
        raise EvaluationError("states cannot be raised to a power")

    def _invert_monomial(self, x: Element) -> Element:
        if len(x.terms) != 1:
            raise EvaluationError("only single-monomial elements, generators and braids have inverses")
        (r, c), = x.terms.items()
        unit = Element(self.ctx, self.n, {r: self.ctx.one()})
        return scale(c.inv(), adjoint(unit))

    def visit_adjoint(self, node: Adjoint) -> Value:
        value = self.visit(node.operand)
        if isinstance(value, Cyclo):
            return value.conj()
        if isinstance(value, Element):
            return adjoint(value)
        if isinstance(value, StateOp):
            return value.adjoint()
        raise EvaluationError("adjoint of a state (a bra) is not supported")

    def visit_vac(self, node: Vac) -> Value:
        value = self.visit(node.operand)
        omega = ground(self.ctx, self.n)
        if isinstance(value, Cyclo):
            return value * omega
        if isinstance(value, Element):
            return apply_element(value, omega)
        if isinstance(value, StateOp):
            return apply_stateop(value, omega)
        raise EvaluationError("|vac> applied to something that is already a state")

    def visit_neg(self, node: Neg) -> Value:
        value = self.visit(node.operand)
        if isinstance(value, StateOp):
            return value.scaled(-self.ctx.one())
        return -value

    def visit_binop(self, node: BinOp) -> Value:
        left = self.visit(node.left)
        right = self.visit(node.right)
        if node.op == "*":
            return self.multiply(left, right)
        if node.op == "-":
            right = right.scaled(-self.ctx.one()) if isinstance(right, StateOp) else -right
        return self.add(left, right)

    def multiply(self, left: Value, right: Value) -> Value:
        if isinstance(left, State):
            raise EvaluationError("a state cannot multiply from the left")
        if isinstance(right, State):
            if isinstance(left, Cyclo):
                return left * right
            if isinstance(left, Element):
                return apply_element(left, right)
            return apply_stateop(left, right)
        if isinstance(left, StateOp) or isinstance(right, StateOp):
            return self.to_stateop(left) * self.to_stateop(right)
        if isinstance(left, Cyclo) and isinstance(right, Cyclo):
            return left * right
        if isinstance(left, Cyclo):
            return scale(left, right)
        if isinstance(right, Cyclo):
            return scale(right, left)
        return left * right

    def add(self, left: Value, right: Value) -> Value:
        if isinstance(left, State) != isinstance(right, State):
            raise EvaluationError("cannot add a state and an operator")
        if isinstance(left, State):
            return left + right
        if isinstance(left, StateOp) or isinstance(right, StateOp):
            return self.to_stateop(left) + self.to_stateop(right)
        if isinstance(left, Cyclo) and isinstance(right, Cyclo):
            return left + right
        return self.to_element(left) + self.to_element(right)


def evaluate(ast: Expr, config: CommandConfig, ctx: Optional[ScalarContext] = None) -> Value:
    """
    Evaluate a parsed expression.

    Args:
        ast: Expression tree from parse()
        config: Command configuration (N, n, backend)
        ctx: Scalar context to reuse (built from config when omitted)

    Returns:
        Cyclo, Element or State
    """
    ctx = ctx or config.context()
    if ctx.N != config.N:
        raise PreconditionError(f"context N={ctx.N} does not match configuration N={config.N}")
    return Evaluator(ctx, config.n).evaluate(ast)


def evaluate_text(text: str, config: CommandConfig, ctx: Optional[ScalarContext] = None) -> Value:
    return evaluate(parse_text(text), config, ctx)
