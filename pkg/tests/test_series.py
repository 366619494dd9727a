import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fockvolterra import (
    TruncatedSeries,
    differentiate,
    evaluate,
    exp_series,
    integrate_from_zero,
    multiply,
    scale,
)

coeff = st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False)
series = st.lists(coeff, min_size=1, max_size=12).map(TruncatedSeries)


def test_multiply_difference_of_squares():
    a = TruncatedSeries([1, 1])
    b = TruncatedSeries([1, -1])
    out = multiply(a, b, 2)
    assert np.allclose(out.coeffs, [1, 0, -1])


def test_multiply_identity_element():
    f = TruncatedSeries([2, 3j, -1, 0.5])
    out = multiply(f, TruncatedSeries.one(0), f.order)
    assert np.array_equal(out.coeffs, f.coeffs)


def test_multiply_exp_inverse_cancellation():
    # e^z * e^{-z} = 1; oracle is the direct convolution at higher order
    n = 8
    ez = TruncatedSeries([1 / math.factorial(k) for k in range(n + 1)])
    emz = TruncatedSeries([(-1) ** k / math.factorial(k) for k in range(n + 1)])
    out = multiply(ez, emz, n)
    assert out.coeffs[0] == 1
    assert np.max(np.abs(out.coeffs[1:])) < 1e-15


def test_integrate_basics():
    assert np.allclose(integrate_from_zero(TruncatedSeries.one(0)).coeffs, [0, 1])
    z3 = TruncatedSeries.monomial(3)
    assert np.allclose(integrate_from_zero(z3).coeffs, [0, 0, 0, 0, 0.25])
    f = TruncatedSeries([0, 2, 3])
    assert np.allclose(integrate_from_zero(f).coeffs, [0, 0, 1, 1])


def test_differentiate_basics():
    q = TruncatedSeries([0, 0, 0, 0, 0.25])
    assert np.allclose(differentiate(q).coeffs, [0, 0, 0, 1])
    assert np.allclose(differentiate(TruncatedSeries([5])).coeffs, [0])


@given(series)
def test_differentiate_undoes_integration(f):
    # exact up to 1 ulp per coefficient (subnormals round in c/(k+1)*(k+1))
    got = differentiate(integrate_from_zero(f)).coeffs
    assert np.allclose(got, f.coeffs, rtol=2.3e-16, atol=1e-307)


@given(series, series)
@settings(max_examples=50)
def test_multiply_commutative(a, b):
    n = max(a.order, b.order)
    ab = multiply(a, b, n)
    ba = multiply(b, a, n)
    assert np.allclose(ab.coeffs, ba.coeffs, atol=1e-12)


@given(series, series, series)
@settings(max_examples=50)
def test_multiply_associative_to_common_order(a, b, c):
    n = min(a.order, b.order, c.order)
    left = multiply(multiply(a, b, n), c, n)
    right = multiply(a, multiply(b, c, n), n)
    assert np.allclose(left.coeffs, right.coeffs, atol=1e-10)


def test_exp_of_zero():
    out = exp_series(TruncatedSeries.zero(5))
    assert np.allclose(out.coeffs, [1, 0, 0, 0, 0, 0])


def test_exp_of_monomial_matches_substitution():
    b = 0.5 - 0.25j
    f = TruncatedSeries.monomial(3, coeff=b, order=12)
    out = exp_series(f)
    want = np.zeros(13, dtype=complex)
    for k in range(5):
        want[3 * k] = b**k / math.factorial(k)
    assert np.allclose(out.coeffs, want, atol=1e-15)


def test_exp_of_z_plus_z2():
    # oracle: exp(z) * exp(z^2) truncated
    f = TruncatedSeries([0, 1, 1, 0, 0])
    out = exp_series(f)
    ez = exp_series(TruncatedSeries.monomial(1, order=4))
    ez2 = exp_series(TruncatedSeries.monomial(2, order=4))
    oracle = multiply(ez, ez2, 4)
    assert np.allclose(out.coeffs, oracle.coeffs, atol=1e-15)
    assert np.allclose(out.coeffs.real, [1, 1, 1.5, 7 / 6, 25 / 24])


@given(series)
@settings(max_examples=50)
def test_exp_times_exp_of_negative_is_one(f):
    e = exp_series(f)
    einv = exp_series(scale(f, -1.0))
    out = multiply(e, einv, f.order)
    assert abs(out.coeffs[0] - 1) < 1e-12
    if f.order:
        assert np.max(np.abs(out.coeffs[1:])) < 1e-12


def test_exp_overflow_is_reported():
    with pytest.raises(OverflowError):
        exp_series(TruncatedSeries([800.0, 1.0]))


def test_evaluate_examples():
    assert evaluate(TruncatedSeries([1, 1]), 1j) == 1 + 1j
    assert evaluate(TruncatedSeries.monomial(2), 2.0) == 4.0
    ez = exp_series(TruncatedSeries.monomial(1, order=20))
    assert abs(evaluate(ez, 1.0) - math.e) < 1e-12


def test_invariants_rejected():
    with pytest.raises(ValueError):
        TruncatedSeries([1.0, float("nan")])
    with pytest.raises(ValueError):
        TruncatedSeries([])
