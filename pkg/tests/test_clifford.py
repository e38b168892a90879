"""Tests for monomials, normal-form elements, relations and the center."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from errors import BackendMismatchError, IndexRangeError, PreconditionError
from clifford import (
    Element,
    adjoint,
    center_basis,
    certify_equal,
    charge_apply,
    charge_decompose,
    check_commutation,
    check_generator_order,
    constant_term,
    elem_add,
    elements_equal,
    format_element,
    format_monomial,
    generator,
    identity,
    identity_monomial,
    is_central,
    is_neutral,
    mono_mul,
    monomial_element,
    subalgebra_map,
    zero,
)
from clifford.monomial import generator_monomial
from scalars.context import context_new

CTX = context_new(3)


def monomials(N, n):
    return st.lists(st.integers(0, N - 1), min_size=2 * n, max_size=2 * n).map(tuple)


def elements(ctx, n, max_terms=4):
    scalars = st.builds(lambda k, c: ctx.field.root(k, c), st.integers(0, ctx.M - 1), st.integers(-3, 3))
    return st.dictionaries(monomials(ctx.N, n), scalars, max_size=max_terms).map(
        lambda terms: Element(ctx, n, terms))


# =============================================================================
# MONOMIALS
# =============================================================================

def test_mono_mul_orders_generators():
    # c2·c1 = q^{-1} c1·c2
    assert mono_mul((0, 1), (1, 0), 3) == (2, (1, 1))
    assert mono_mul((1, 0), (0, 1), 3) == (0, (1, 1))


@given(monomials(3, 2), monomials(3, 2), monomials(3, 2))
def test_mono_mul_is_associative(r, s, t):
    p1, rs = mono_mul(r, s, 3)
    p2, left = mono_mul(rs, t, 3)
    p3, st_ = mono_mul(s, t, 3)
    p4, right = mono_mul(r, st_, 3)
    assert left == right
    assert (p1 + p2) % 3 == (p3 + p4) % 3


def test_format_monomial():
    assert format_monomial((1, 2, 0, 0)) == "c1*c2^2"
    assert format_monomial(identity_monomial(2)) == "1"


def test_generator_monomial_range():
    with pytest.raises(IndexRangeError):
        generator_monomial(5, 2, 3)
    assert generator_monomial(2, 1, 3, power=-1) == (0, 2)


# =============================================================================
# ELEMENTS
# =============================================================================

def test_normal_form_of_reversed_pair():
    x = generator(CTX, 1, 2) * generator(CTX, 1, 1)
    assert format_element(x) == "q^2*c1*c2"


def test_zero_and_identity():
    one = identity(CTX, 2)
    assert zero(CTX, 2).is_zero()
    assert format_element(zero(CTX, 2)) == "0"
    assert format_element(one) == "1"
    assert constant_term(one) == 1


@given(elements(CTX, 1), elements(CTX, 1), elements(CTX, 1))
def test_product_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(elements(CTX, 2), elements(CTX, 2), elements(CTX, 2))
def test_product_distributes(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(elements(CTX, 2), elements(CTX, 2))
def test_adjoint_reverses_products(x, y):
    assert adjoint(x * y) == adjoint(y) * adjoint(x)
    assert adjoint(adjoint(x)) == x


@given(elements(CTX, 2))
def test_charge_sectors_recombine(x):
    total = zero(CTX, 2)
    sectors = charge_decompose(x)
    assert len(sectors) == 3
    assert is_neutral(sectors[0])
    for j, sector in enumerate(sectors):
        assert all(sum(r) % 3 == j for r in sector.terms)
        total = elem_add(total, sector)
    assert total == x


def test_charge_operator_scales_by_q():
    c1 = generator(CTX, 1, 1)
    assert charge_apply(c1) == CTX.q * c1
    assert charge_apply(identity(CTX, 1)) == identity(CTX, 1)


def test_generator_inverse():
    for i in range(1, 5):
        assert generator(CTX, 2, i) * generator(CTX, 2, i, -1) == identity(CTX, 2)


def test_adjoint_of_generator_is_inverse():
    c = generator(CTX, 2, 3)
    assert adjoint(c) == generator(CTX, 2, 3, -1)


def test_monomial_element_checks_length():
    with pytest.raises(PreconditionError):
        monomial_element(CTX, 2, [1, 0])


def test_elements_from_different_algebras_do_not_mix():
    with pytest.raises(PreconditionError):
        identity(CTX, 1) + identity(CTX, 2)
    with pytest.raises(PreconditionError):
        identity(CTX, 1) * identity(context_new(2), 1)


def test_backend_mismatch():
    loose = CTX.with_backend("float")
    with pytest.raises(BackendMismatchError):
        identity(CTX, 1) + identity(loose, 1)


def test_element_needs_a_qudit():
    with pytest.raises(PreconditionError):
        Element(CTX, 0)


def test_float_backend_equality():
    loose = CTX.with_backend("float", tolerance=1e-9)
    x = generator(loose, 1, 1)
    assert elements_equal(x, x * 1)
    assert not elements_equal(x, generator(loose, 1, 2))


# =============================================================================
# RELATIONS AND CENTER
# =============================================================================

@pytest.mark.parametrize("N", [2, 3])
def test_defining_relations(N):
    ctx = context_new(N)
    n = 3
    for i in range(1, 2 * n + 1):
        assert check_generator_order(ctx, n, i)
        for j in range(i + 1, 2 * n + 1):
            assert check_commutation(ctx, n, i, j)


@pytest.mark.slow
@pytest.mark.parametrize("N", [4, 5])
def test_defining_relations_larger_N(N):
    ctx = context_new(N)
    n = 3
    for i in range(1, 2 * n + 1):
        assert check_generator_order(ctx, n, i)
        for j in range(i + 1, 2 * n + 1):
            assert check_commutation(ctx, n, i, j)


@pytest.mark.parametrize("N,n", [(2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (5, 1)])
def test_center_is_trivial(N, n):
    assert center_basis(N, n) == [identity_monomial(n)]


@pytest.mark.slow
@pytest.mark.parametrize("N,n", [(2, 3), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3)])
def test_center_is_trivial_larger(N, n):
    assert center_basis(N, n) == [identity_monomial(n)]


def test_center_basis_preconditions():
    with pytest.raises(PreconditionError):
        center_basis(1, 2)


def test_central_elements():
    assert is_central(identity(CTX, 2))
    assert not is_central(generator(CTX, 2, 1))


def test_certificate_requires_inverse():
    x = identity(CTX, 1)
    with pytest.raises(PreconditionError):
        certify_equal(x, x, generator(CTX, 1, 1))


def test_certificate_requires_constant_term():
    x = generator(CTX, 1, 1)
    one = identity(CTX, 1)
    with pytest.raises(PreconditionError):
        certify_equal(x, one, one)


def test_certificate_distinguishes():
    one = identity(CTX, 1)
    certificate = certify_equal(one + generator(CTX, 1, 1), one, one)
    assert not certificate.passed
    assert not certificate.direct_equal
    assert certificate.agrees

    two = one * 2
    half = one * Fraction(1, 2)
    assert certify_equal(two, two, half).passed


def test_subalgebra_map():
    x = generator(CTX, 1, 1) * generator(CTX, 1, 2)
    mapped = subalgebra_map(x, {1: 3, 2: 4}, target_n=2)
    assert mapped == generator(CTX, 2, 3) * generator(CTX, 2, 4)
    with pytest.raises(PreconditionError):
        subalgebra_map(x, {1: 4, 2: 3}, target_n=2)
    with pytest.raises(IndexRangeError):
        subalgebra_map(x, {1: 3, 2: 5}, target_n=2)


@pytest.mark.parametrize("N", [2, 3, 4])
@pytest.mark.parametrize("source_n,index_map", [
    (1, {1: 2, 2: 5}),
    (2, {1: 1, 2: 3, 3: 4, 4: 6}),
])
@given(data=st.data())
def test_subalgebra_map_is_multiplicative(N, source_n, index_map, data):
    ctx = context_new(N)
    x = data.draw(elements(ctx, source_n))
    y = data.draw(elements(ctx, source_n))
    phi = lambda v: subalgebra_map(v, index_map, target_n=3)
    assert phi(x * y) == phi(x) * phi(y)
    assert phi(x + y) == phi(x) + phi(y)
    assert phi(identity(ctx, source_n)) == identity(ctx, 3)
