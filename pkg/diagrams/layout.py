#!/usr/bin/env python3
"""
Layout - Transcribe braid words and expressions into rows of graphical primitives.

A layout has 2n vertical strands and an ordered list of rows, read top to
bottom. The first-applied operator sits on top (the ground caps of a ket come
first), and an open layout ends with one identity row of outgoing strands.
Orientation: the rightmost factor of a written word is the top row, so
"b[3,4]*b[2,3]" draws b[2,3] above b[3,4]; the last-applied operator is the
bottom row, just above the outgoing strands.
Scalars are never consulted; a layout is a pure transcription.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple, Union

from errors import DiagramError, IndexRangeError
from braids.word import BraidWord, check_pair
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
)

logger = logging.getLogger(__name__)

ROW_KINDS = ("identity", "label", "crossing", "capcup", "caps", "measure", "box")

# Operator entries produced while flattening an expression:
#   ("label", strand, exponent) | ("braid", k, l) | ("capcup", k)
Op = Tuple


def _delta_marker(power: Fraction) -> str:
    if power.denominator == 1:
        return f"δ^{power.numerator}"
    return f"δ^{power.numerator}/{power.denominator}"


@dataclass(frozen=True)
class Row:
    """One primitive spanning the full width of the diagram."""
    kind: str
    strands: Tuple[int, ...] = ()  # 1-based strands the primitive acts on
    sign: int = 0  # crossings and boxes: +1 for b[l,l+1] orientation, -1 for the inverse
    exponent: int = 0  # charge labels
    marker: str = ""  # normalization note or box caption

    def describe(self) -> str:
        if self.kind == "identity":
            return "identity"
        if self.kind == "label":
            return f"label {self.exponent} left of strand {self.strands[0]}"
        if self.kind == "crossing":
            return f"crossing {'+' if self.sign > 0 else '-'} ({self.strands[0]},{self.strands[1]})"
        if self.kind == "box":
            return f"box {self.marker} over strands {self.strands[0]}..{self.strands[-1]}"
        strands = ",".join(str(s) for s in self.strands)
        return f"{self.kind} ({strands}) {self.marker}".rstrip()


@dataclass
class Layout:
    """Rows of primitives over 2n strands."""
    n: int
    rows: List[Row] = field(default_factory=list)
    footnotes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.n < 1:
            raise IndexRangeError(f"a diagram needs n >= 1, got {self.n}")

    @property
    def strand_count(self) -> int:
        return 2 * self.n

    def _check_strand(self, strand: int):
        if not 1 <= strand <= self.strand_count:
            raise IndexRangeError(f"strand {strand} outside 1..{self.strand_count}")

    def add_identity(self):
        self.rows.append(Row("identity"))

    def add_label(self, strand: int, exponent: int):
        """Charge label for c_strand^exponent, drawn immediately left of the strand."""
        self._check_strand(strand)
        self.rows.append(Row("label", (strand,), exponent=exponent))

    def add_braid(self, k: int, l: int):
        """Crossing for adjacent strands, labeled box for a nonlocal pair."""
        check_pair(k, l, self.n)
        low, high = min(k, l), max(k, l)
        sign = 1 if k < l else -1
        if high - low == 1:
            self.rows.append(Row("crossing", (low, high), sign=sign))
            return
        note = len(self.footnotes) + 1
        self.footnotes.append(f"[{note}] b[{k},{l}] is nonlocal and has no crossing diagram")
        self.rows.append(Row("box", tuple(range(low, high + 1)), sign=sign, marker=f"b[{k},{l}] [{note}]"))

    def add_capcup(self, left: int, right: int):
        """Cup-cap replacing strands (2k-1, 2k); straddling pairs are rejected."""
        self._check_strand(left)
        self._check_strand(right)
        if right != left + 1 or left % 2 == 0:
            raise DiagramError(
                f"cup-cap on strands ({left},{right}) straddles qudits; only (2k-1,2k) placements exist"
            )
        self.rows.append(Row("capcup", (left, right), marker=_delta_marker(Fraction(-1))))

    def add_projector(self, k: int):
        if not 1 <= k <= self.n:
            raise IndexRangeError(f"projector index {k} outside 1..{self.n}")
        self.add_capcup(2 * k - 1, 2 * k)

    def add_caps(self):
        """Ground caps opening every qudit (a ket)."""
        self.rows.append(Row("caps", tuple(range(1, self.strand_count + 1)),
                             marker=_delta_marker(Fraction(-self.n, 2))))

    def add_measure(self):
        """Ground cups closing every qudit (a bra)."""
        self.rows.append(Row("measure", tuple(range(1, self.strand_count + 1)),
                             marker=_delta_marker(Fraction(-self.n, 2))))

    def add_op(self, op: Op):
        if op[0] == "label":
            self.add_label(op[1], op[2])
        elif op[0] == "braid":
            self.add_braid(op[1], op[2])
        else:
            self.add_projector(op[1])

    def describe(self) -> List[str]:
        return [row.describe() for row in self.rows] + self.footnotes


# =============================================================================
# FLATTENING
# =============================================================================

def _invert(op: Op) -> Op:
    if op[0] == "label":
        return ("label", op[1], -op[2])
    if op[0] == "braid":
        return ("braid", op[2], op[1])
    return op


def _flatten(node: Expr) -> Tuple[List[Op], bool]:
    """Operators in written order plus whether the expression ends in |vac>."""
    if isinstance(node, (Number, Symbol)):
        return [], False
    if isinstance(node, Gen):
        return [("label", node.index, 1)], False
    if isinstance(node, Proj):
        return [("capcup", node.index)], False
    if isinstance(node, Braid):
        return [("braid", node.k, node.l)], False
    if isinstance(node, Neg):
        return _flatten(node.operand)
    if isinstance(node, Power):
        if isinstance(node.base, Gen):
            return [("label", node.base.index, node.exponent)], False
        ops, ket = _flatten(node.base)
        if ket:
            raise DiagramError("a state cannot be raised to a power")
        if node.exponent < 0:
            ops = [_invert(op) for op in reversed(ops)]
        return ops * abs(node.exponent), False
    if isinstance(node, Adjoint):
        ops, ket = _flatten(node.operand)
        if ket:
            raise DiagramError("bras are drawn with the measure row, not an adjoint")
        return [_invert(op) for op in reversed(ops)], False
    if isinstance(node, Vac):
        ops, ket = _flatten(node.operand)
        if ket:
            raise DiagramError("|vac> applied to an expression that is already a state")
        return ops, True
    if isinstance(node, BinOp):
        if node.op != "*":
            raise DiagramError("sums and differences have no single diagram")
        left, left_ket = _flatten(node.left)
        right, right_ket = _flatten(node.right)
        if left_ket:
            raise DiagramError("a state can only be the rightmost factor of a product")
        return left + right, right_ket
    raise DiagramError(f"cannot draw {node!r}")


def required_qudits(node: Expr) -> int:
    """Smallest n whose 2n strands hold every index in the expression (at least 1)."""
    if isinstance(node, Gen):
        return (node.index + 1) // 2
    if isinstance(node, Proj):
        return node.index
    if isinstance(node, Braid):
        return (max(node.k, node.l) + 1) // 2
    if isinstance(node, BinOp):
        return max(required_qudits(node.left), required_qudits(node.right))
    if isinstance(node, Power):
        return required_qudits(node.base)
    if isinstance(node, (Adjoint, Vac, Neg)):
        return required_qudits(node.operand)
    return 1


def layout(source: Union[BraidWord, Expr], n: int, measure: bool = False) -> Layout:
    """
    Lay out a braid word or a parsed expression.

    Args:
        source: BraidWord, or an expression tree from lang.parse_text
        n: Number of qudits (2n strands)
        measure: Close the diagram with a measure row instead of open strands

    Returns:
        Layout whose first row is the first-applied operator

    Raises:
        DiagramError: undrawable expression or straddling cup-cap
        IndexRangeError / PreconditionError: indices invalid for n
    """
    result = Layout(n)
    if isinstance(source, BraidWord):
        source.validate(n)
        ops, ket = [("braid", k, l) for k, l in source], False
    else:
        ops, ket = _flatten(source)

    if ket:
        result.add_caps()
    # written order is applied right to left
    for op in reversed(ops):
        result.add_op(op)
    if measure:
        result.add_measure()
    else:
        result.add_identity()

    logger.debug(f"Laid out {len(result.rows)} rows over {result.strand_count} strands")
    return result
