"""Tests for the expression tokenizer, parser, evaluator and JSON serialization."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from errors import (
    ContextMisuseError,
    EvaluationError,
    IndexRangeError,
    ParseError,
    PreconditionError,
    SerializationError,
    TokenizeError,
)
from braids import braid_element
from clifford import generator, identity, zero
from lang import (
    Adjoint,
    BinOp,
    Braid,
    CommandConfig,
    Evaluator,
    Gen,
    Neg,
    Number,
    Power,
    Proj,
    Symbol,
    Vac,
    deserialize,
    evaluate_text,
    parse_text,
    print_expr,
    serialize,
    tokenize,
)
from scalars.context import context_new
from states import State, basis_ket, ground

CTX3 = context_new(3)


def run(text, N=3, n=1):
    return evaluate_text(text, CommandConfig(N=N, n=n))


# =============================================================================
# TOKENIZER
# =============================================================================

def test_tokenize_braid_product():
    tokens = tokenize("b[1,2]*b[2,3]")
    assert len(tokens) == 11
    assert [t.kind for t in tokens[:6]] == ["BRAID", "INT", "COMMA", "INT", "RBRACKET", "STAR"]
    assert tokens[6].offset == 7


def test_tokenize_vacuum_and_rationals():
    tokens = tokenize("1/2*c[1]^-1|vac>")
    assert tokens[0].kind == "RATIONAL"
    assert tokens[0].value == Fraction(1, 2)
    assert tokens[-2].value == -1
    assert tokens[-1].kind == "VAC"


def test_unclosed_bracket():
    with pytest.raises(TokenizeError) as info:
        tokenize("c[1")
    assert info.value.offset == 3


@pytest.mark.parametrize("text,offset", [("c[1]#", 4), ("c[1]]", 4), ("foo", 0), ("1/0", 2)])
def test_tokenize_errors_report_offsets(text, offset):
    with pytest.raises(TokenizeError) as info:
        tokenize(text)
    assert info.value.offset == offset


# =============================================================================
# PARSER
# =============================================================================

def test_precedence():
    assert parse_text("c[1] + c[2]*c[3]") == BinOp("+", Gen(1), BinOp("*", Gen(2), Gen(3)))
    assert parse_text("-c[1]^2'") == Neg(Adjoint(Power(Gen(1), 2)))
    assert parse_text("(E[1]*c[2])|vac>") == Vac(BinOp("*", Proj(1), Gen(2)))


@pytest.mark.parametrize("text,offset", [("c[1] *", 6), ("c[0]", 2), ("c[1] c[2]", 5), ("", 0), ("b[1]", 3)])
def test_parse_errors_report_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_text(text)
    assert info.value.offset == offset


leaves = st.one_of(
    st.fractions(min_value=0, max_value=5, max_denominator=4).map(Number),
    st.sampled_from(["q", "zeta", "omega", "omegaSqrt", "sqrtN"]).map(Symbol),
    st.integers(1, 6).map(Gen),
    st.integers(1, 3).map(Proj),
    st.tuples(st.integers(1, 6), st.integers(1, 6)).map(lambda p: Braid(*p)),
)

expressions = st.recursive(
    leaves,
    lambda children: st.one_of(
        st.tuples(children, st.integers(-3, 3)).map(lambda t: Power(*t)),
        children.map(Adjoint),
        children.map(Vac),
        children.map(Neg),
        st.tuples(st.sampled_from(["+", "-", "*"]), children, children).map(lambda t: BinOp(*t)),
    ),
    max_leaves=8,
)


@given(expressions)
def test_print_parse_round_trip(ast):
    assert parse_text(print_expr(ast)) == ast


# =============================================================================
# EVALUATOR
# =============================================================================

def test_normal_form_command_example():
    x = run("c[2]*c[1]")
    assert x == CTX3.q * CTX3.q * (generator(CTX3, 1, 1) * generator(CTX3, 1, 2))


def test_scalars():
    assert run("omega*omega'") == 1
    assert run("sqrtN^2") == 3
    assert run("zeta^2") == CTX3.q
    assert run("1/2 + 1/2") == 1


def test_braid_inverse():
    assert run("b[1,2]*b[2,1]") == identity(CTX3, 1)
    assert run("b[1,2]^-1") == braid_element(2, 1, CTX3, 1)
    assert run("b[1,2]'") == braid_element(2, 1, CTX3, 1)


def test_generator_powers():
    assert run("c[1]^3") == identity(CTX3, 1)
    assert run("c[1]^-1") == generator(CTX3, 1, 1, 2)
    assert run("c[1] - c[1]") == zero(CTX3, 1)


def test_vacuum_expressions():
    assert run("c[2]|vac>") == basis_ket(CTX3, 1, (1,))
    assert run("E[1]*c[2]|vac>").is_zero()
    assert run("c[2]*E[1]|vac>") == basis_ket(CTX3, 1, (1,))
    assert run("2|vac>") == 2 * ground(CTX3, 1)


def test_twist_through_evaluator():
    s = run("b[1,2]*E[1]|vac>")
    assert s == CTX3.omega_sqrt.conj() * ground(CTX3, 1)


def test_projector_outside_vacuum_context():
    with pytest.raises(ContextMisuseError):
        run("E[1]*c[1]")


def test_index_ranges():
    with pytest.raises(IndexRangeError):
        run("c[3]")
    with pytest.raises(IndexRangeError):
        run("E[2]|vac>")
    with pytest.raises(IndexRangeError):
        run("b[1,3]")
    with pytest.raises(PreconditionError):
        run("b[1,1]")


def test_evaluation_errors():
    with pytest.raises(EvaluationError):
        run("(c[1]|vac>)|vac>")
    with pytest.raises(EvaluationError):
        run("c[1]|vac> + c[1]")
    with pytest.raises(EvaluationError):
        run("(c[1] + c[2])^-1")


def test_evaluator_visit_keeps_stateops():
    evaluator = Evaluator(CTX3, 1)
    value = evaluator.visit(parse_text("E[1]"))
    assert not isinstance(value, State)
    with pytest.raises(ContextMisuseError):
        evaluator.evaluate(parse_text("E[1]"))


def test_command_config_validation():
    with pytest.raises(PreconditionError):
        CommandConfig(N=1, n=1)
    with pytest.raises(PreconditionError):
        CommandConfig(N=3, n=1, output_format="xml")


# =============================================================================
# SERIALIZATION
# =============================================================================

def test_serialize_ground_state():
    ctx = context_new(2)
    data = json.loads(serialize(ground(ctx, 2)))
    assert data == {
        "N": 2,
        "n": 2,
        "terms": [{"a": [0, 0], "scalar": {"M": 64, "coeffs": [[0, 1, 1]]}}],
    }


def test_serialization_is_byte_stable():
    x = run("b[1,2]*c[2]", n=2)
    assert serialize(x) == serialize(run("b[1,2]*c[2]", n=2))


@pytest.mark.parametrize("text", ["q + 1/3", "b[1,2]*c[2] - c[3]", "b[3,4]*b[2,3]|vac>", "0*c[1]"])
def test_round_trip(text):
    value = run(text, n=2)
    assert deserialize(serialize(value), CTX3) == value


def test_empty_values_need_a_kind():
    empty_state = State(CTX3, 2)
    text = serialize(empty_state)
    assert deserialize(text, CTX3, expect="state") == empty_state
    assert deserialize(text, CTX3) == zero(CTX3, 2)


def test_deserialize_rejects_bad_input():
    with pytest.raises(SerializationError) as info:
        deserialize('{"M": 144', CTX3)
    assert info.value.offset == 9
    with pytest.raises(SerializationError):
        deserialize('{"M": 64, "coeffs": []}', CTX3)
    with pytest.raises(SerializationError):
        deserialize('{"M": 144, "coeffs": [[0, 1, 0]]}', CTX3)
    with pytest.raises(SerializationError):
        deserialize('{"N": 2, "n": 1, "terms": []}', CTX3)
    with pytest.raises(SerializationError):
        deserialize(serialize(ground(CTX3, 1)), CTX3, expect="element")
