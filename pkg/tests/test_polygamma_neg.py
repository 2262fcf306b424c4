import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from tornheim.polygamma_neg import (
    bernoulli_A,
    bernoulli_A_raw,
    negapolygamma,
    negapolygamma_derivative_check,
    negapolygamma_raw,
)
from tornheim.specfun import DomainError, bernoulli_poly, harmonic


def mp_negapolygamma(m, q):
    """Oracle: (m zeta'(1-m, q) - H_{m-1} B_m(q)) / m! with mpmath's zeta derivative."""
    with mp.workdps(60):
        q = mpf(q)
        hm = harmonic(m - 1)
        val = m * mpmath.zeta(1 - m, q, 1) - mpf(hm.numerator) / hm.denominator * mpmath.bernpoly(m, q)
        return val / math.factorial(m)


@pytest.mark.parametrize("q", ["0.05", "0.3", "0.5", "0.77", "0.999"])
def test_psi_minus_one_is_log_gamma(q):
    v = negapolygamma(1, mpf(q))
    assert abs(v.value - (mpmath.loggamma(mpf(q)) - mpmath.log(2 * mp.pi) / 2)) <= v.err + 1e-27


@pytest.mark.parametrize("m", range(1, 9))
@pytest.mark.parametrize("q", ["0.1", "0.45", "0.9"])
def test_negapolygamma_vs_mpmath_oracle(m, q):
    v = negapolygamma(m, mpf(q))
    assert abs(v.value - mp_negapolygamma(m, q)) <= v.err + 1e-27


@pytest.mark.parametrize("k", [1, 2, 5])
def test_bernoulli_A_definition(k):
    q = mpf("0.3")
    assert abs(bernoulli_A(k, q).value - k * mpmath.zeta(1 - k, q, 1)) < 1e-26
    assert abs(bernoulli_A_raw(k, q) - bernoulli_A(k, q).value) < 1e-28


@pytest.mark.parametrize("m", range(2, 9))
def test_balanced_integral_vanishes(m):
    v = mpmath.quad(lambda q: negapolygamma_raw(m, q), [0, 0.5, 1])
    assert abs(v) < 1e-20


@pytest.mark.parametrize("m", range(2, 9))
def test_balanced_endpoints(m):
    for e in ("1e-6", "1e-10", "1e-14"):
        e = mpf(e)
        # the derivative psi^(-m+1) grows like ln(1/q) at m = 2
        bound = 10 * e * (1 - mpmath.log(e))
        assert abs(negapolygamma(m, e).value - negapolygamma(m, 1 - e).value) < bound
    assert negapolygamma(m, 0).value == negapolygamma(m, 1).value


@pytest.mark.parametrize("m, q, delta, tol", [
    (2, "0.5", "1e-5", 1e-8),
    (3, "0.3", "1e-5", 1e-8),
    (2, "0.9", "1e-4", 1e-6),
])
def test_derivative_ladder_examples(m, q, delta, tol):
    assert negapolygamma_derivative_check(m, mpf(q), mpf(delta)) <= tol


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 6), st.floats(0.05, 0.95))
def test_derivative_ladder_vs_mpmath_diff(m, q):
    q = mpf(q)
    d = mpmath.diff(lambda x: negapolygamma_raw(m, x), q)
    assert abs(d - negapolygamma_raw(m - 1, q)) < 1e-20


def test_negapolygamma_bernoulli_part():
    # psi^(-m) - A_m/m! is a polynomial: -H_{m-1} B_m / m!
    q = mpf("0.4")
    m = 4
    diff = negapolygamma_raw(m, q) - bernoulli_A_raw(m, q) / 24
    hm = harmonic(3)
    assert abs(diff + mpf(hm.numerator) / hm.denominator * bernoulli_poly(4, q) / 24) < 1e-28


def test_domain_errors():
    with pytest.raises(DomainError):
        negapolygamma(0, 0.5)
    with pytest.raises(DomainError):
        negapolygamma(1, 0)
    with pytest.raises(DomainError):
        negapolygamma(2, 1.5)
    with pytest.raises(DomainError):
        bernoulli_A(0, 0.5)
    with pytest.raises(DomainError):
        negapolygamma_derivative_check(1, 0.5)
