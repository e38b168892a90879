"""Tests for braid elements, words and the operator identities."""

from itertools import combinations, permutations

import pytest
from hypothesis import given, strategies as st

from errors import IndexRangeError, PreconditionError
from braids import (
    BraidWord,
    braid_element,
    check_adjoint_intertwiner,
    check_charge_transport,
    check_distant_commutation,
    check_master_intertwiner,
    check_neutral_commutation,
    check_pair,
    check_unitarity,
    check_unitarity_certificate,
    check_yang_baxter,
    word_eval,
    yang_baxter_certificate,
)
from clifford import adjoint, certify_equal, charge_apply, elem_mul, generator, identity, is_neutral
from scalars.context import context_new

CTX2 = context_new(2)


def pairs(n):
    return st.tuples(st.integers(1, 2 * n), st.integers(1, 2 * n)).filter(lambda p: p[0] != p[1])


def words(n, max_length=3):
    return st.lists(pairs(n), max_size=max_length).map(BraidWord.of)


# =============================================================================
# WORDS
# =============================================================================

def test_word_text_and_adjoint():
    word = BraidWord.of([(1, 2), (2, 3)])
    assert str(word) == "b[1,2]*b[2,3]"
    assert word.adjoint() == BraidWord.of([(3, 2), (2, 1)])
    assert str(BraidWord()) == "1"
    assert len(word) == 2


def test_pair_validation():
    with pytest.raises(PreconditionError):
        check_pair(2, 2, 2)
    with pytest.raises(IndexRangeError):
        check_pair(1, 5, 2)
    with pytest.raises(IndexRangeError):
        BraidWord.of([(1, 2), (0, 1)]).validate(2)


def test_braid_element_shape(ctx):
    b = braid_element(1, 2, ctx, 1)
    assert len(b.terms) == ctx.N
    assert is_neutral(b)


def test_empty_word_is_identity(ctx):
    assert word_eval(BraidWord(), ctx, 2) == identity(ctx, 2)


@given(words(2))
def test_word_adjoint_matches_element_adjoint(word):
    assert adjoint(word_eval(word, CTX2, 2)) == word_eval(word.adjoint(), CTX2, 2)


@given(words(2))
def test_words_are_neutral(word):
    assert is_neutral(word_eval(word, CTX2, 2))


def test_conjugation_preserves_charge(ctx):
    n = 2
    w = word_eval(BraidWord.of([(1, 2), (3, 2)]), ctx, n)
    w_dagger = adjoint(w)
    for i in range(1, 2 * n + 1):
        x = generator(ctx, n, i)
        assert charge_apply(elem_mul(elem_mul(w, x), w_dagger)) == \
            elem_mul(elem_mul(w, charge_apply(x)), w_dagger)


# =============================================================================
# INTERTWINERS
# =============================================================================

def test_intertwiners(ctx):
    n = 2
    for k, l in combinations(range(1, 2 * n + 1), 2):
        for a in range(ctx.N):
            for b in range(ctx.N):
                assert check_master_intertwiner(ctx, n, k, l, a, b)
                assert check_adjoint_intertwiner(ctx, n, k, l, a, b)


def test_intertwiners_need_ordered_pair(ctx2):
    with pytest.raises(PreconditionError):
        check_master_intertwiner(ctx2, 2, 3, 1, 0, 1)


def test_neutral_commutation(ctx):
    n = 2
    assert check_neutral_commutation(ctx, n, 2, 3, 1, ctx.N - 1, p=1)
    assert check_neutral_commutation(ctx, n, 1, 2, 1, 1, p=4)
    assert check_neutral_commutation(ctx, n, 1, 4, 1, 0)
    with pytest.raises(PreconditionError):
        check_neutral_commutation(ctx, n, 1, 3, 1, 1, p=2)


def test_charge_transport(ctx):
    for k, l in combinations(range(1, 5), 2):
        assert check_charge_transport(ctx, 2, k, l)


# =============================================================================
# UNITARITY AND THE BRAID RELATION
# =============================================================================

def test_unitarity(ctx):
    for k, l in permutations(range(1, 5), 2):
        assert check_unitarity(ctx, 2, k, l)


def test_unitarity_certificate(ctx):
    for k, l in combinations(range(1, 5), 2):
        assert check_unitarity_certificate(ctx, 2, k, l)


def test_distant_commutation(ctx):
    assert check_distant_commutation(ctx, 2, 1, 2, 3, 4)
    assert check_distant_commutation(ctx, 2, 1, 4, 2, 3)
    assert check_distant_commutation(ctx, 2, 2, 1, 4, 3)
    with pytest.raises(PreconditionError):
        check_distant_commutation(ctx, 2, 1, 3, 2, 4)


def test_yang_baxter(ctx):
    for i, j, k in combinations(range(1, 5), 3):
        assert check_yang_baxter(ctx, 2, i, j, k)


def test_yang_baxter_needs_increasing_triple(ctx2):
    with pytest.raises(PreconditionError):
        check_yang_baxter(ctx2, 2, 2, 1, 3)


def test_yang_baxter_certificate(ctx):
    certificate = yang_baxter_certificate(ctx, 2, 1, 2, 3)
    assert certificate.central
    assert certificate.passed
    assert certificate.to_dict()["passed"]


def test_yang_baxter_certificate_uses_cross_term_for_N2(ctx2):
    certificate = yang_baxter_certificate(ctx2, 2, 1, 2, 3)
    assert certificate.sum_a_vanishes
    assert certificate.constant_lhs.is_zero()
    assert certificate.cross_route
    assert certificate.passed


@pytest.mark.parametrize("N", [3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_certify_equal_on_braid_relation(N):
    ctx = context_new(N)
    x = word_eval(BraidWord.of([(1, 2), (2, 3), (1, 2)]), ctx, 2)
    y = word_eval(BraidWord.of([(2, 3), (1, 2), (2, 3)]), ctx, 2)
    y_inv = word_eval(BraidWord.of([(3, 2), (2, 1), (3, 2)]), ctx, 2)
    assert elem_mul(y_inv, y) == identity(ctx, 2)

    certificate = certify_equal(x, y, y_inv)
    assert certificate.central_check
    assert certificate.constant_match
    assert certificate.passed
    assert certificate.direct_equal


@pytest.mark.slow
@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_braid_identities_n3(N):
    ctx = context_new(N)
    n = 3
    strands = range(1, 2 * n + 1)
    for k, l in combinations(strands, 2):
        assert check_unitarity(ctx, n, k, l)
        assert check_unitarity(ctx, n, l, k)
        for a in range(N):
            for b in range(N):
                assert check_master_intertwiner(ctx, n, k, l, a, b)
                assert check_adjoint_intertwiner(ctx, n, k, l, a, b)
    for i, j, k in combinations(strands, 3):
        assert check_yang_baxter(ctx, n, i, j, k)
