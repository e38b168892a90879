#!/usr/bin/env python3
"""
Tokenizer - Split algebra expressions into positioned tokens.

Vocabulary: c[ E[ b[ openers, integers (signed directly after ^), rationals
p/r, the symbols q zeta omega omegaSqrt sqrtN, brackets, ^ * + - ' and |vac>.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

from errors import TokenizeError

SYMBOLS = ("q", "zeta", "omega", "omegaSqrt", "sqrtN")
OPENERS = {"c": "GEN", "E": "PROJ", "b": "BRAID"}
SINGLE = {
    ",": "COMMA",
    "]": "RBRACKET",
    "(": "LPAREN",
    ")": "RPAREN",
    "^": "CARET",
    "*": "STAR",
    "+": "PLUS",
    "-": "MINUS",
    "'": "ADJOINT",
}
VACUUM = "|vac>"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int
    value: Optional[Union[int, Fraction, str]] = None

    def __str__(self) -> str:
        return f"{self.kind}({self.text!r}@{self.offset})"


def _read_digits(text: str, i: int) -> int:
    while i < len(text) and text[i].isdigit():
        i += 1
    return i


def tokenize(text: str) -> List[Token]:
    """
    Tokenize an expression.

    Args:
        text: Expression source

    Returns:
        Tokens in source order, each with its character offset

    Raises:
        TokenizeError: unknown character or identifier, or unbalanced square bracket
    """
    tokens: List[Token] = []
    open_brackets: List[int] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue

        if text.startswith(VACUUM, i):
            tokens.append(Token("VAC", VACUUM, i))
            i += len(VACUUM)
            continue

        # signed exponent right after a caret
        if ch == "-" and tokens and tokens[-1].kind == "CARET" and i + 1 < len(text) and text[i + 1].isdigit():
            end = _read_digits(text, i + 1)
            tokens.append(Token("INT", text[i:end], i, int(text[i:end])))
            i = end
            continue

        if ch.isdigit():
            end = _read_digits(text, i)
            if end + 1 < len(text) and text[end] == "/" and text[end + 1].isdigit():
                stop = _read_digits(text, end + 1)
                denominator = int(text[end + 1:stop])
                if denominator == 0:
                    raise TokenizeError(f"zero denominator at offset {end + 1}", offset=end + 1)
                tokens.append(Token("RATIONAL", text[i:stop], i, Fraction(int(text[i:end]), denominator)))
                i = stop
            else:
                tokens.append(Token("INT", text[i:end], i, int(text[i:end])))
                i = end
            continue

        if ch.isalpha():
            end = i
            while end < len(text) and text[end].isalpha():
                end += 1
            word = text[i:end]
            if word in OPENERS and end < len(text) and text[end] == "[":
                tokens.append(Token(OPENERS[word], text[i:end + 1], i, word))
                open_brackets.append(end)
                i = end + 1
                continue
            if word in SYMBOLS:
                tokens.append(Token("SYMBOL", word, i, word))
                i = end
                continue
            raise TokenizeError(f"unknown identifier '{word}' at offset {i}", offset=i)

        if ch in SINGLE:
            if ch == "]":
                if not open_brackets:
                    raise TokenizeError(f"unmatched ']' at offset {i}", offset=i)
                open_brackets.pop()
            tokens.append(Token(SINGLE[ch], ch, i))
            i += 1
            continue

        raise TokenizeError(f"unexpected character {ch!r} at offset {i}", offset=i)

    if open_brackets:
        raise TokenizeError(f"unclosed bracket opened at offset {open_brackets[-1]}", offset=len(text))
    return tokens
