"""Tests for the clock/shift representation and symbolic-vs-numeric agreement."""

import numpy as np
import pytest

from errors import PreconditionError, RepBudgetError
from braids import BraidWord, word_eval
from clifford import generator
from oracle import (
    braid_matrix,
    build_rep,
    check_faithfulness,
    cross_validate,
    cross_validate_word,
    elem_to_matrix,
    state_to_vector,
    verify_rep,
    word_to_matrix,
)
from reports.suites import random_element, random_state, random_word
from scalars.context import context_new
from states import apply_element, ground


@pytest.fixture
def rep(ctx):
    return build_rep(ctx, 2)


def test_build_passes_axioms(rep):
    assert rep.dim == rep.N ** 2
    assert verify_rep(rep) == []


def test_budget_is_enforced(ctx):
    with pytest.raises(RepBudgetError):
        build_rep(ctx, 3, max_dim=ctx.N)
    with pytest.raises(PreconditionError):
        build_rep(ctx, 0)


def test_ground_maps_to_first_basis_vector(rep):
    vector = state_to_vector(ground(rep.ctx, 2), rep)
    assert np.allclose(vector, rep.ground)


def test_braid_matrix_matches_symbolic_element(rep):
    ctx = rep.ctx
    for k, l in [(1, 2), (2, 1), (2, 3), (4, 1)]:
        symbolic = elem_to_matrix(word_eval(BraidWord.of([(k, l)]), ctx, 2), rep)
        assert np.allclose(braid_matrix(k, l, rep), symbolic, atol=1e-9)


def test_braid_matrices_are_unitary(rep):
    b = word_to_matrix(BraidWord.of([(1, 2), (2, 3), (1, 2)]), rep)
    assert np.allclose(b @ b.conj().T, np.eye(rep.dim), atol=1e-9)


def test_braid_relation_numerically(rep):
    lhs = word_to_matrix(BraidWord.of([(1, 2), (2, 3), (1, 2)]), rep)
    rhs = word_to_matrix(BraidWord.of([(2, 3), (1, 2), (2, 3)]), rep)
    assert np.allclose(lhs, rhs, atol=1e-9)


def test_generator_action_matches(rep):
    ctx = rep.ctx
    omega = ground(ctx, 2)
    for i in range(1, 5):
        x = generator(ctx, 2, i)
        numeric = elem_to_matrix(x, rep) @ state_to_vector(omega, rep)
        assert np.allclose(state_to_vector(apply_element(x, omega), rep), numeric, atol=1e-9)


def test_random_cross_validation(rep):
    ctx = rep.ctx
    rng = np.random.default_rng(7)
    for _ in range(10):
        s = random_state(rng, ctx, 2)
        assert cross_validate(random_element(rng, ctx, 2), s, rep).passed
        assert cross_validate_word(random_word(rng, 2), s, rep).passed


def test_cross_validation_tolerance_must_be_positive(rep):
    with pytest.raises(PreconditionError):
        cross_validate(generator(rep.ctx, 2, 1), ground(rep.ctx, 2), rep, tol=0)


def test_faithfulness(rep):
    assert check_faithfulness(rep)


def test_faithfulness_single_qudit():
    assert check_faithfulness(build_rep(context_new(2), 1))


@pytest.mark.slow
@pytest.mark.parametrize("N,n", [(2, 3), (3, 3), (4, 2), (4, 3)])
def test_random_cross_validation_larger(N, n):
    ctx = context_new(N)
    rep = build_rep(ctx, n)
    rng = np.random.default_rng(N * 10 + n)
    for _ in range(20):
        s = random_state(rng, ctx, n)
        assert cross_validate(random_element(rng, ctx, n), s, rep).passed
        assert cross_validate_word(random_word(rng, n), s, rep).passed
