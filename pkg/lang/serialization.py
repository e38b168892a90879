#!/usr/bin/env python3
"""
Serialization - JSON encoding of scalars, Elements and States.

Schemas:
    Cyclo   {"M": int, "coeffs": [[index, numerator, denominator], ...]}
    Element {"N": int, "n": int, "terms": [{"exps": [...], "scalar": Cyclo}, ...]}
    State   {"N": int, "n": int, "terms": [{"a": [...], "scalar": Cyclo}, ...]}
Entries are in ascending index / lexicographic order, so output is byte-stable.
"""

import json
import logging
from fractions import Fraction
from typing import Any, Dict, Optional, Union

from errors import SerializationError
from clifford.element import Element
from scalars.context import ScalarContext
from scalars.cyclotomic import Cyclo, CyclotomicField
from states.state import State

logger = logging.getLogger(__name__)

Serializable = Union[Cyclo, Element, State]
KINDS = ("cyclo", "element", "state")


def cyclo_to_data(x: Cyclo) -> Dict[str, Any]:
    return {"M": x.M, "coeffs": [[k, c.numerator, c.denominator] for k, c in x.terms]}


def element_to_data(x: Element) -> Dict[str, Any]:
    return {
        "N": x.N,
        "n": x.n,
        "terms": [{"exps": list(r), "scalar": cyclo_to_data(c)} for r, c in x.terms.items()],
    }


def state_to_data(s: State) -> Dict[str, Any]:
    return {
        "N": s.N,
        "n": s.n,
        "terms": [{"a": list(a), "scalar": cyclo_to_data(c)} for a, c in s.coeffs.items()],
    }


def to_data(value: Serializable) -> Dict[str, Any]:
    if isinstance(value, Cyclo):
        return cyclo_to_data(value)
    if isinstance(value, Element):
        return element_to_data(value)
    if isinstance(value, State):
        return state_to_data(value)
    raise SerializationError(f"cannot serialize {type(value).__name__}")


def serialize(value: Serializable) -> str:
    """JSON text for a Cyclo, Element or State."""
    return json.dumps(to_data(value))


# =============================================================================
# LOADING
# =============================================================================

def _require(data: Any, key: str, kind: type):
    if not isinstance(data, dict) or key not in data:
        raise SerializationError(f"missing field '{key}'")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise SerializationError(f"field '{key}' must be {kind.__name__}")
    return value


def cyclo_from_data(data: Any, ctx: ScalarContext) -> Cyclo:
    return cyclo_in_field(data, ctx.field)


def cyclo_in_field(data: Any, field: CyclotomicField) -> Cyclo:
    """Load a Cyclo whose "M" must name ``field``; Gauss sums, for one, live in Q(ζ_N)."""
    M = _require(data, "M", int)
    if M != field.M:
        raise SerializationError(f"modulus mismatch: data has M={M}, field has M={field.M}")
    raw: Dict[int, Fraction] = {}
    for entry in _require(data, "coeffs", list):
        if (not isinstance(entry, list) or len(entry) != 3
                or not all(isinstance(v, int) and not isinstance(v, bool) for v in entry)):
            raise SerializationError(f"coefficient entry {entry!r} must be [index, numerator, denominator]")
        index, numerator, denominator = entry
        if not 0 <= index < M:
            raise SerializationError(f"coefficient index {index} outside 0..{M - 1}")
        if denominator <= 0:
            raise SerializationError(f"denominator must be positive, got {denominator}")
        raw[index] = raw.get(index, 0) + Fraction(numerator, denominator)
    return field.reduce(raw)


def _check_sizes(data: Any, ctx: ScalarContext):
    N = _require(data, "N", int)
    n = _require(data, "n", int)
    if N != ctx.N:
        raise SerializationError(f"dimension mismatch: data has N={N}, context has N={ctx.N}")
    if n < 1:
        raise SerializationError(f"n must be >= 1, got {n}")
    return n


def _label(entry: Any, key: str, length: int):
    label = _require(entry, key, list)
    if len(label) != length or not all(isinstance(v, int) and not isinstance(v, bool) for v in label):
        raise SerializationError(f"'{key}' must be a list of {length} integers")
    return label


def element_from_data(data: Any, ctx: ScalarContext) -> Element:
    n = _check_sizes(data, ctx)
    terms = {}
    for entry in _require(data, "terms", list):
        r = tuple(v % ctx.N for v in _label(entry, "exps", 2 * n))
        scalar = cyclo_from_data(_require(entry, "scalar", dict), ctx)
        terms[r] = terms[r] + scalar if r in terms else scalar
    return Element(ctx, n, terms)


def state_from_data(data: Any, ctx: ScalarContext) -> State:
    n = _check_sizes(data, ctx)
    coeffs = {}
    for entry in _require(data, "terms", list):
        a = tuple(v % ctx.N for v in _label(entry, "a", n))
        scalar = cyclo_from_data(_require(entry, "scalar", dict), ctx)
        coeffs[a] = coeffs[a] + scalar if a in coeffs else scalar
    return State(ctx, n, coeffs)


def detect_kind(data: Any) -> Optional[str]:
    """'cyclo', 'element', 'state', or None when an empty term list leaves it open."""
    if not isinstance(data, dict):
        raise SerializationError("top-level JSON value must be an object")
    if "M" in data and "coeffs" in data:
        return "cyclo"
    terms = data.get("terms")
    if not isinstance(terms, list):
        raise SerializationError("object is neither a Cyclo nor an Element/State")
    if not terms:
        return None
    first = terms[0]
    if isinstance(first, dict) and "exps" in first:
        return "element"
    if isinstance(first, dict) and "a" in first:
        return "state"
    raise SerializationError("cannot tell Element from State: first term has neither 'exps' nor 'a'")


def deserialize(text: str, ctx: ScalarContext, expect: Optional[str] = None) -> Serializable:
    """
    Inverse of serialize.

    Args:
        text: JSON text
        ctx: Scalar context the value belongs to
        expect: 'cyclo', 'element' or 'state'; required to read an empty Element/State

    Raises:
        SerializationError: malformed JSON, schema violation or size/modulus mismatch
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SerializationError(f"malformed JSON: {e.msg} at offset {e.pos}", offset=e.pos) from e
    if expect is not None and expect not in KINDS:
        raise SerializationError(f"unknown kind '{expect}'")

    kind = detect_kind(data)
    if kind is None:
        kind = expect or "element"
    elif expect is not None and kind != expect:
        raise SerializationError(f"expected {expect}, found {kind}")

    if kind == "cyclo":
        return cyclo_from_data(data, ctx)
    if kind == "element":
        return element_from_data(data, ctx)
    return state_from_data(data, ctx)
