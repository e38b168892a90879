#!/usr/bin/env python3
"""
Parser - Recursive-descent parser and canonical printer for algebra expressions.

Grammar:
    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] atom ['^' int] ["'"] ['|vac>']
    atom   := number | symbol | c[i] | E[k] | b[k,l] | '(' expr ')'

Products need an explicit '*'; the adjoint mark binds tighter than '*'.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from errors import ParseError
from lang.tokenizer import Token, tokenize


# =============================================================================
# AST
# =============================================================================

@dataclass(frozen=True)
class Number:
    value: Fraction


@dataclass(frozen=True)
class Symbol:
    name: str


@dataclass(frozen=True)
class Gen:
    index: int


@dataclass(frozen=True)
class Proj:
    index: int


@dataclass(frozen=True)
class Braid:
    k: int
    l: int


@dataclass(frozen=True)
class Power:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Adjoint:
    operand: "Expr"


@dataclass(frozen=True)
class Vac:
    operand: "Expr"


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str  # '+', '-' or '*'
    left: "Expr"
    right: "Expr"


Expr = Union[Number, Symbol, Gen, Proj, Braid, Power, Adjoint, Vac, Neg, BinOp]
ATOMS = (Number, Symbol, Gen, Proj, Braid)


# =============================================================================
# PARSER
# =============================================================================

class Parser:
    """Consumes a token list; one instance per parse."""

    def __init__(self, tokens: List[Token], source_length: int = 0):
        self.tokens = tokens
        self.position = 0
        self.source_length = source_length

    def peek(self) -> Optional[Token]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def advance(self) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of input", offset=self.source_length)
        self.position += 1
        return token

    def expect(self, kind: str) -> Token:
        token = self.peek()
        if token is None:
            raise ParseError(f"expected {kind} but input ended", offset=self.source_length)
        if token.kind != kind:
            raise ParseError(f"expected {kind}, found {token.text!r} at offset {token.offset}",
                             offset=token.offset)
        return self.advance()

    def parse(self) -> Expr:
        if not self.tokens:
            raise ParseError("empty expression", offset=0)
        node = self.expr()
        token = self.peek()
        if token is not None:
            raise ParseError(f"unexpected {token.text!r} at offset {token.offset}", offset=token.offset)
        return node

    def expr(self) -> Expr:
        node = self.term()
        while self.peek() is not None and self.peek().kind in ("PLUS", "MINUS"):
            op = "+" if self.advance().kind == "PLUS" else "-"
            node = BinOp(op, node, self.term())
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.peek() is not None and self.peek().kind == "STAR":
            self.advance()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self) -> Expr:
        token = self.peek()
        if token is not None and token.kind == "MINUS":
            self.advance()
            return Neg(self.postfix())
        return self.postfix()

    def postfix(self) -> Expr:
        node = self.atom()
        token = self.peek()
        if token is not None and token.kind == "CARET":
            self.advance()
            node = Power(node, self.expect("INT").value)
            token = self.peek()
        if token is not None and token.kind == "ADJOINT":
            self.advance()
            node = Adjoint(node)
            token = self.peek()
        if token is not None and token.kind == "VAC":
            self.advance()
            node = Vac(node)
        return node

    def index(self) -> int:
        token = self.expect("INT")
        if token.value < 1:
            raise ParseError(f"indices are positive integers, got {token.text} at offset {token.offset}",
                             offset=token.offset)
        return token.value

    def atom(self) -> Expr:
        token = self.advance()
        if token.kind == "INT":
            if token.value < 0:
                raise ParseError(f"signed integer only allowed as exponent (offset {token.offset})",
                                 offset=token.offset)
            return Number(Fraction(token.value))
        if token.kind == "RATIONAL":
            return Number(token.value)
        if token.kind == "SYMBOL":
            return Symbol(token.value)
        if token.kind == "GEN":
            node = Gen(self.index())
            self.expect("RBRACKET")
            return node
        if token.kind == "PROJ":
            node = Proj(self.index())
            self.expect("RBRACKET")
            return node
        if token.kind == "BRAID":
            k = self.index()
            self.expect("COMMA")
            l = self.index()
            self.expect("RBRACKET")
            return Braid(k, l)
        if token.kind == "LPAREN":
            node = self.expr()
            self.expect("RPAREN")
            return node
        raise ParseError(f"unexpected {token.text!r} at offset {token.offset}", offset=token.offset)


def parse(tokens: List[Token], source_length: int = 0) -> Expr:
    """Parse a token sequence from tokenize()."""
    return Parser(tokens, source_length).parse()


def parse_text(text: str) -> Expr:
    return parse(tokenize(text), len(text))


# =============================================================================
# PRINTER
# =============================================================================

def _postfix_operand(node: Expr, allowed) -> str:
    text = print_expr(node)
    return text if isinstance(node, allowed) else f"({text})"


def print_expr(node: Expr) -> str:
    """Canonical text; parse_text(print_expr(ast)) == ast."""
    if isinstance(node, Number):
        value = node.value
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, Gen):
        return f"c[{node.index}]"
    if isinstance(node, Proj):
        return f"E[{node.index}]"
    if isinstance(node, Braid):
        return f"b[{node.k},{node.l}]"
    if isinstance(node, Power):
        return f"{_postfix_operand(node.base, ATOMS)}^{node.exponent}"
    if isinstance(node, Adjoint):
        return f"{_postfix_operand(node.operand, ATOMS + (Power,))}'"
    if isinstance(node, Vac):
        return f"{_postfix_operand(node.operand, ATOMS + (Power, Adjoint))}|vac>"
    if isinstance(node, Neg):
        return f"-{_postfix_operand(node.operand, ATOMS + (Power, Adjoint, Vac))}"
    if isinstance(node, BinOp):
        left = print_expr(node.left)
        right = print_expr(node.right)
        if node.op == "*":
            if isinstance(node.left, BinOp) and node.left.op != "*":
                left = f"({left})"
            if isinstance(node.right, BinOp):
                right = f"({right})"
            return f"{left}*{right}"
        if isinstance(node.right, BinOp) and node.right.op != "*":
            right = f"({right})"
        return f"{left} {node.op} {right}"
    raise ParseError(f"cannot print node {node!r}")
