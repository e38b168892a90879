"""
Lang - Expression language, evaluation and JSON serialization.

This package provides:
- tokenize / parse / print_expr: the expression syntax (c[i], E[k], b[k,l], |vac>, ...)
- evaluate: expressions to scalars, Elements or States
- serialize / deserialize: byte-stable JSON for values
"""

from lang.tokenizer import Token, tokenize
from lang.parser import (
    Adjoint,
    BinOp,
    Braid,
    Expr,
    Gen,
    Neg,
    Number,
    Parser,
    Power,
    Proj,
    Symbol,
    Vac,
    parse,
    parse_text,
    print_expr,
)
from lang.evaluator import CommandConfig, Evaluator, evaluate, evaluate_text
from lang.serialization import (
    cyclo_to_data,
    deserialize,
    element_to_data,
    serialize,
    state_to_data,
    to_data,
)

__all__ = [
    "Token",
    "tokenize",
    "Adjoint",
    "BinOp",
    "Braid",
    "Expr",
    "Gen",
    "Neg",
    "Number",
    "Parser",
    "Power",
    "Proj",
    "Symbol",
    "Vac",
    "parse",
    "parse_text",
    "print_expr",
    "CommandConfig",
    "Evaluator",
    "evaluate",
    "evaluate_text",
    "cyclo_to_data",
    "deserialize",
    "element_to_data",
    "serialize",
    "state_to_data",
    "to_data",
]
