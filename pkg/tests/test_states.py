"""Tests for exact states, the ground-state moves and closed-form chains."""

import pytest
from hypothesis import given, strategies as st

from errors import IndexRangeError, PreconditionError
from braids import BraidWord, braid_element
from clifford import generator, identity, scale
from scalars.context import context_new
from states import (
    GeneratorAtom,
    ProjectorAtom,
    State,
    StateOp,
    all_kets,
    apply_element,
    apply_generator,
    apply_projector,
    apply_stateop,
    apply_word,
    basis_ket,
    charges,
    check_chain_identities,
    check_chain_projections,
    check_closed_form_chain,
    check_general_slide_corollary,
    check_nonlocal_entangler,
    check_slide,
    check_slip,
    check_twist,
    check_two_qudit_forms,
    closed_form_chain,
    closed_form_chain_odd,
    format_state,
    ground,
    inner,
    states_equal,
    vev,
)

CTX3 = context_new(3)


def pairs(n):
    return st.tuples(st.integers(1, 2 * n), st.integers(1, 2 * n)).filter(lambda p: p[0] != p[1])


def words(n, max_length=4):
    return st.lists(pairs(n), max_size=max_length).map(BraidWord.of)


def labels(N, n):
    return st.lists(st.integers(0, N - 1), min_size=n, max_size=n).map(tuple)


# =============================================================================
# BASIS AND ACTIONS
# =============================================================================

def test_ground_state(ctx):
    omega = ground(ctx, 2)
    assert format_state(omega) == "|0,0>"
    assert inner(omega, omega) == 1
    assert format_state(State(ctx, 2)) == "0"


def test_basis_is_orthonormal(ctx):
    kets = list(all_kets(2, ctx.N))
    for a in kets:
        for b in kets:
            expected = 1 if a == b else 0
            assert inner(basis_ket(ctx, 2, a), basis_ket(ctx, 2, b)) == expected


def test_even_generators_step_labels(ctx):
    s = apply_generator(2, ground(ctx, 2))
    assert s == basis_ket(ctx, 2, (1, 0))
    # c4 picks up q^{-a_1} passing c2
    s = apply_generator(4, basis_ket(ctx, 2, (1, 0)))
    assert s == ctx.q_power(-1) * basis_ket(ctx, 2, (1, 1))


def test_odd_generators_follow_ground_axiom(ctx):
    omega = ground(ctx, 2)
    for k in (1, 2):
        odd = apply_generator(2 * k - 1, omega)
        even = apply_generator(2 * k, omega)
        assert states_equal(odd, ctx.zeta * even)


@given(labels(3, 2), st.integers(1, 4), st.integers(0, 2))
def test_generator_powers_match_repeated_application(a, j, power):
    s = basis_ket(CTX3, 2, a)
    repeated = s
    for _ in range(power):
        repeated = apply_generator(j, repeated)
    assert apply_generator(j, s, power) == repeated


def test_element_action_is_linear(ctx):
    s = basis_ket(ctx, 2, (1, 0))
    x = generator(ctx, 2, 1)
    y = generator(ctx, 2, 4)
    assert apply_element(x + y, s) == apply_element(x, s) + apply_element(y, s)
    assert apply_element(scale(ctx.q, x), s) == ctx.q * apply_element(x, s)


def test_projector(ctx):
    s = basis_ket(ctx, 2, (0, 1)) + basis_ket(ctx, 2, (1, 0))
    assert apply_projector(1, s) == basis_ket(ctx, 2, (0, 1))
    assert apply_projector(2, s) == basis_ket(ctx, 2, (1, 0))
    with pytest.raises(IndexRangeError):
        apply_projector(3, s)


def test_generator_index_range(ctx):
    with pytest.raises(IndexRangeError):
        apply_generator(5, ground(ctx, 2))


def test_element_and_state_sizes_must_match(ctx):
    with pytest.raises(PreconditionError):
        apply_element(identity(ctx, 1), ground(ctx, 2))


def test_vev(ctx):
    assert vev(identity(ctx, 1)) == 1
    assert vev(generator(ctx, 1, 2)).is_zero()
    # b12 acts on the ground state as ω^{-1/2}
    assert vev(braid_element(1, 2, ctx, 1)) == ctx.omega_sqrt.conj()


def test_stateop_with_projectors(ctx):
    omega = ground(ctx, 1)
    project_after = StateOp.sequence(ctx, [ProjectorAtom(1), GeneratorAtom(2)])
    assert apply_stateop(project_after, omega).is_zero()
    project_first = StateOp.sequence(ctx, [GeneratorAtom(2), ProjectorAtom(1)])
    assert apply_stateop(project_first, omega) == basis_ket(ctx, 1, (1,))
    assert apply_stateop(project_first.adjoint(), basis_ket(ctx, 1, (1,))) == omega


# =============================================================================
# UNITARITY AND CHARGE ON STATES
# =============================================================================

@given(words(2), labels(3, 2))
def test_words_preserve_norm_and_charge(word, a):
    s = basis_ket(CTX3, 2, a)
    image = apply_word(word, s)
    assert inner(image, image) == 1
    assert charges(image) == [sum(a) % 3]


@given(words(2))
def test_word_and_adjoint_cancel(word):
    omega = ground(CTX3, 2)
    assert apply_word(word.adjoint(), apply_word(word, omega)) == omega


# =============================================================================
# MOVES
# =============================================================================

def test_twist(ctx):
    for k in (1, 2):
        assert check_twist(ctx, 2, k)
        assert check_twist(ctx, 2, k, adjoint=True)
    with pytest.raises(PreconditionError):
        check_twist(ctx, 2, 3)


def test_slide_and_slip(ctx):
    assert check_slide(ctx, 2, 1, 2)
    assert check_slip(ctx, 2, 1, 2)
    assert check_general_slide_corollary(ctx, 2, 1, 2)
    with pytest.raises(PreconditionError):
        check_slide(ctx, 2, 2, 1)


def test_chain_identities(ctx):
    report = check_chain_identities(ctx, 2)
    assert report.short
    assert report.long is None
    assert report.passed
    with pytest.raises(PreconditionError):
        check_chain_identities(ctx, 1)


def test_nonlocal_entangler(ctx):
    assert check_nonlocal_entangler(ctx, 2)


@pytest.mark.slow
@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_moves_n3(N):
    ctx = context_new(N)
    n = 3
    for k in range(1, n + 1):
        assert check_twist(ctx, n, k)
    for k, l in [(1, 2), (1, 3), (2, 3)]:
        assert check_slide(ctx, n, k, l)
        assert check_slip(ctx, n, k, l)
        assert check_general_slide_corollary(ctx, n, k, l)
    report = check_chain_identities(ctx, n)
    assert report.short and report.long
    assert check_nonlocal_entangler(ctx, n)


# =============================================================================
# CLOSED FORMS
# =============================================================================

def test_closed_form_chain(ctx):
    assert closed_form_chain(1, ctx, 2) == ground(ctx, 2)
    for k in (1, 2):
        assert check_closed_form_chain(ctx, 2, k)
        assert check_chain_projections(ctx, 2, k)
    assert check_two_qudit_forms(ctx, 2)


def test_odd_generator_form_agrees(ctx):
    assert states_equal(closed_form_chain(2, ctx, 2), closed_form_chain_odd(2, ctx, 2))


def test_closed_form_is_normalized(ctx):
    chain = closed_form_chain(2, ctx, 2)
    assert inner(chain, chain) == 1
    assert charges(chain) == [0]


def test_closed_form_site_range(ctx):
    with pytest.raises(PreconditionError):
        closed_form_chain(3, ctx, 2)


@pytest.mark.slow
@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_closed_forms_n3(N):
    ctx = context_new(N)
    for k in (1, 2, 3):
        assert check_closed_form_chain(ctx, 3, k)
        assert check_chain_projections(ctx, 3, k)
    assert check_two_qudit_forms(ctx, 3)
