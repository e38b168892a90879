"""Tests for exact cyclotomic arithmetic, scalar contexts and Gauss sums."""

import cmath
import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from errors import PreconditionError, ScalarError, SerializationError
from lang.serialization import cyclo_from_data
from scalars import (
    context_new,
    cyclo_eq,
    cyclotomic_polynomial,
    embed_complex,
    gauss_diagnostics,
    get_field,
    hansen_closed_forms,
)
from scalars.gauss import GaussReport

SMALL_M = 12
FIELD = get_field(SMALL_M)

fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)
raw_coeffs = st.dictionaries(st.integers(0, SMALL_M - 1), fractions, max_size=6)
cyclos = raw_coeffs.map(FIELD.reduce)


# =============================================================================
# FIELD
# =============================================================================

def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert len(cyclotomic_polynomial(16)) - 1 == 8


def test_root_of_unity_reduces_to_minus_one():
    # ζ_12^6 = -1
    assert FIELD.root(6) == -1
    assert FIELD.root(SMALL_M) == 1


def test_canonical_form_is_unique():
    # 1 + ζ^4 + ζ^8 = 0 for ζ a primitive 12th root
    assert FIELD.reduce({0: 1, 4: 1, 8: 1}).is_zero()


@given(cyclos, cyclos, cyclos)
def test_field_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == 0


@given(cyclos)
def test_inverse(x):
    if x.is_zero():
        with pytest.raises(ScalarError):
            x.inv()
    else:
        assert x * x.inv() == 1


@given(cyclos, cyclos)
def test_conjugation_is_an_involutive_automorphism(x, y):
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()


@given(cyclos)
def test_embedding_agrees_with_arithmetic(x):
    value = complex(x)
    expected = sum(complex(c) * cmath.exp(2j * cmath.pi * k / SMALL_M) for k, c in x.terms)
    assert abs(value - expected) < 1e-9
    assert abs(complex(x * x) - value * value) < 1e-9


def test_cyclo_eq_backends():
    x = FIELD.root(1)
    y = FIELD.root(1) + FIELD.rational(Fraction(1, 10 ** 15))
    assert cyclo_eq(x, x)
    assert not cyclo_eq(x, y)
    assert cyclo_eq(x, y, backend="float", tolerance=1e-9)


def test_modulus_mismatch_is_rejected():
    with pytest.raises(ScalarError):
        cyclo_eq(get_field(8).one(), get_field(12).one())
    with pytest.raises(ScalarError):
        get_field(8).root(1) + get_field(12).root(1)


def test_division_by_zero():
    with pytest.raises(ScalarError):
        FIELD.one() / 0
    with pytest.raises(ScalarError):
        FIELD.zero().inv()


def test_embedding_precision():
    x = FIELD.root(1)
    value = embed_complex(x, 128)
    assert abs(complex(value) - cmath.exp(2j * cmath.pi / SMALL_M)) < 1e-14


# =============================================================================
# CONTEXT
# =============================================================================

@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_context_constants(N):
    ctx = context_new(N)
    assert ctx.M == 16 * N * N
    assert ctx.zeta * ctx.zeta == ctx.q
    assert ctx.zeta ** (N * N) == 1
    assert ctx.q ** N == 1
    assert ctx.sqrtN * ctx.sqrtN == N
    assert ctx.omega_sqrt * ctx.omega_sqrt == ctx.omega
    assert ctx.omega * ctx.omega.conj() == 1


@pytest.mark.slow
@pytest.mark.parametrize("N", [6, 7, 8])
def test_context_constants_larger_N(N):
    ctx = context_new(N)
    assert ctx.zeta * ctx.zeta == ctx.q
    assert ctx.sqrtN * ctx.sqrtN == N
    assert ctx.omega_sqrt * ctx.omega_sqrt == ctx.omega


def test_constants_embed_as_expected(ctx):
    N = ctx.N
    assert abs(complex(ctx.q) - cmath.exp(2j * cmath.pi / N)) < 1e-12
    assert abs(complex(ctx.zeta) - cmath.exp(1j * cmath.pi * (N + 1) / N)) < 1e-12
    assert abs(complex(ctx.sqrtN) - N ** 0.5) < 1e-12
    gauss = sum(cmath.exp(1j * cmath.pi * (N + 1) / N * i * i) for i in range(N)) / N ** 0.5
    assert abs(complex(ctx.omega) - gauss) < 1e-12


def test_context_is_shared(ctx):
    assert context_new(ctx.N) is ctx


def test_context_rejects_bad_arguments():
    with pytest.raises(PreconditionError):
        context_new(1)
    with pytest.raises(PreconditionError):
        context_new(3, backend="symbolic")


def test_float_backend_context(ctx):
    loose = ctx.with_backend("float", tolerance=1e-9)
    assert loose.backend == "float"
    assert loose.equal(loose.q, loose.q + loose.field.rational(Fraction(1, 10 ** 14)))
    assert not ctx.equal(ctx.q, ctx.q + ctx.field.rational(Fraction(1, 10 ** 14)))


def test_format_scalar(ctx3):
    assert ctx3.format_scalar(ctx3.one()) == "1"
    assert ctx3.format_scalar(ctx3.scalar(Fraction(-1, 2))) == "-1/2"
    assert ctx3.format_scalar(ctx3.q) == "q"
    assert ctx3.format_scalar(ctx3.q * ctx3.q) == "q^2"
    assert ctx3.format_scalar(-ctx3.q) == "-q"


# =============================================================================
# GAUSS SUMS
# =============================================================================

@pytest.mark.parametrize("N", range(2, 17))
def test_gauss_vanishing_pattern(N):
    report = gauss_diagnostics(N)
    assert report.vanishes_a == (N % 4 == 2)
    assert report.vanishes_b == (N % 4 == 0)
    assert max(report.hansen_residuals) < 1e-9


@pytest.mark.slow
@pytest.mark.parametrize("N", range(17, 65))
def test_gauss_vanishing_pattern_to_64(N):
    report = gauss_diagnostics(N)
    assert report.vanishes_a == (N % 4 == 2)
    assert report.vanishes_b == (N % 4 == 0)
    assert max(report.hansen_residuals) < 1e-9


def test_gauss_two():
    report = gauss_diagnostics(2)
    assert report.sum_a == 0
    assert report.sum_b == 2


def test_hansen_closed_forms():
    cos_form, sin_form = hansen_closed_forms(4)
    assert cos_form == pytest.approx(2.0)
    assert sin_form == pytest.approx(2.0)


def test_gauss_rejects_small_N():
    with pytest.raises(PreconditionError):
        gauss_diagnostics(1)


def test_gauss_report_json_keeps_its_field():
    report = gauss_diagnostics(7)
    data = json.loads(json.dumps(report.to_dict()))
    assert data["sum_a"]["M"] == 7
    assert GaussReport.from_dict(data) == report
    with pytest.raises(SerializationError):
        cyclo_from_data(data["sum_a"], context_new(3))
