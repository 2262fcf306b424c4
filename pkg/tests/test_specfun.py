from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp, mpf

from tornheim.specfun import (
    DomainError,
    PoleError,
    bernoulli_number,
    bernoulli_poly,
    bernoulli_poly_coeffs,
    const_A,
    const_A_minus,
    const_A_plus,
    digamma,
    euler_gamma,
    h,
    harmonic,
    hurwitz_zeta,
    hurwitz_zeta_zderiv,
    log_2pi,
    log_gamma,
    riemann_zeta,
    riemann_zeta_deriv,
    zeta_prime_zero,
    zeta_value,
)

KNOWN_BERNOULLI = {
    0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
    6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66), 12: Fraction(-691, 2730),
    14: Fraction(7, 6), 20: Fraction(-174611, 330),
}


def oracle(fn, *args, dps=60):
    with mp.workdps(dps):
        return fn(*args)


@pytest.mark.parametrize("n, value", sorted(KNOWN_BERNOULLI.items()))
def test_bernoulli_numbers_table(n, value):
    assert bernoulli_number(n) == value


@pytest.mark.parametrize("n", [3, 5, 7, 21, 55])
def test_odd_bernoulli_numbers_vanish(n):
    assert bernoulli_number(n) == 0


def test_bernoulli_numbers_match_mpmath():
    for n in range(0, 60, 2):
        b = bernoulli_number(n)
        assert abs(mpf(b.numerator) / b.denominator - oracle(mpmath.bernoulli, n)) <= mpf(10) ** -25 * max(1, abs(b))


def test_bernoulli_poly_coeffs_low_order():
    assert bernoulli_poly_coeffs(1) == (Fraction(-1, 2), Fraction(1))
    assert bernoulli_poly_coeffs(2) == (Fraction(1, 6), Fraction(-1), Fraction(1))


@given(st.integers(0, 24), st.fractions(0, 1, max_denominator=50))
def test_bernoulli_poly_exact_matches_mpmath(n, q):
    exact = bernoulli_poly(n, q)
    assert isinstance(exact, Fraction)
    with mp.workdps(60):
        ref = mpmath.bernpoly(n, mpf(q.numerator) / q.denominator)
        assert abs(mpf(exact.numerator) / exact.denominator - ref) < mpf(10) ** -40


@given(st.integers(1, 16), st.floats(-3, 3))
def test_bernoulli_difference_identity(n, q):
    q = mpf(q)
    lhs = bernoulli_poly(n, q + 1) - bernoulli_poly(n, q)
    assert abs(lhs - n * q ** (n - 1)) <= mpf(10) ** -20 * max(1, abs(q) ** n) * 2 ** n


def test_harmonic_numbers():
    assert harmonic(0) == 0
    assert harmonic(4) == Fraction(25, 12)
    assert h(1) == 0 and h(4) == Fraction(11, 6)


def test_constants():
    assert abs(euler_gamma() - mpmath.euler) < mpf(10) ** -29
    assert abs(log_2pi() - mpmath.log(2 * mp.pi)) < mpf(10) ** -29
    a = const_A()
    assert abs(a - mpmath.euler - mpmath.log(2 * mp.pi)) < mpf(10) ** -29
    assert abs(const_A_plus() - (a ** 2 + mp.pi ** 2 / 4)) < mpf(10) ** -28
    assert abs(const_A_minus() - (a ** 2 - mp.pi ** 2 / 4)) < mpf(10) ** -28
    assert abs(zeta_prime_zero() + mpmath.log(2 * mp.pi) / 2) < mpf(10) ** -29


@pytest.mark.parametrize("s", [2, 3, 4, 5, 2.5, 7.25, 12, 1.0001])
def test_riemann_zeta_vs_mpmath(s):
    r = riemann_zeta(s)
    ref = oracle(mpmath.zeta, mpf(s))
    assert abs(r.value - ref) <= r.err + mpf(10) ** -28 * abs(ref)


def test_riemann_zeta_even_values():
    assert abs(riemann_zeta(2).value - mp.pi ** 2 / 6) < mpf(10) ** -29
    assert abs(riemann_zeta(4).value - mp.pi ** 4 / 90) < mpf(10) ** -29


@pytest.mark.parametrize("s, order", [(2, 1), (2, 2), (3, 1), (4, 2), (2.5, 1)])
def test_riemann_zeta_derivatives_vs_mpmath(s, order):
    r = riemann_zeta_deriv(s, order)
    ref = oracle(mpmath.zeta, mpf(s), 1, order)
    assert abs(r.value - ref) <= r.err + mpf(10) ** -27


@pytest.mark.parametrize("bad", [1, 0.5, -2])
def test_riemann_zeta_domain(bad):
    with pytest.raises(DomainError):
        riemann_zeta(bad)


def test_zeta_value_continuation():
    assert zeta_value(0) == mpf(-0.5)
    assert abs(zeta_value(-1) + mpf(1) / 12) < mpf(10) ** -29
    assert abs(zeta_value(-2)) < mpf(10) ** -29
    assert abs(zeta_value(0.5) - oracle(mpmath.zeta, mpf(0.5))) < mpf(10) ** -28


hurwitz_grid = [(z, q) for z in ("-4.5", "-1", "0.5", "1.5", "2", "3.75", "8")
                for q in ("0.01", "0.3", "0.5", "0.999", "1")]


@pytest.mark.parametrize("z, q", hurwitz_grid)
def test_hurwitz_zeta_vs_mpmath(z, q):
    r = hurwitz_zeta(mpf(z), mpf(q))
    ref = oracle(mpmath.zeta, mpf(z), mpf(q))
    assert abs(r.value - ref) <= r.err + mpf(10) ** -27 * max(1, abs(ref))


@pytest.mark.parametrize("z, q", hurwitz_grid)
def test_hurwitz_zeta_zderiv_vs_mpmath(z, q):
    r = hurwitz_zeta_zderiv(mpf(z), mpf(q))
    ref = oracle(mpmath.zeta, mpf(z), mpf(q), 1)
    assert abs(r.value - ref) <= r.err + mpf(10) ** -26 * max(1, abs(ref))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 10), st.floats(0.01, 1.0))
def test_zeta_at_negative_integers_is_bernoulli(k, q):
    q = mpf(q)
    lhs = hurwitz_zeta(1 - k, q).value
    assert abs(lhs + bernoulli_poly(k, q) / k) < mpf(10) ** -24


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 1.0))
def test_lerch(q):
    q = mpf(q)
    lhs = hurwitz_zeta_zderiv(0, q).value
    assert abs(lhs - (mpmath.loggamma(q) - mpmath.log(2 * mp.pi) / 2)) < mpf(10) ** -25


def test_hurwitz_domain_errors():
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 0)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, 1.5)
    with pytest.raises(PoleError):
        hurwitz_zeta(1, 0.5)


@pytest.mark.parametrize("q", ["0.001", "0.25", "0.5", "0.9", "1", "2.5", "40"])
def test_log_gamma_and_digamma_vs_mpmath(q):
    q = mpf(q)
    lg, dg = log_gamma(q), digamma(q)
    assert abs(lg.value - oracle(mpmath.loggamma, q)) <= lg.err + mpf(10) ** -27
    assert abs(dg.value - oracle(mpmath.digamma, q)) <= dg.err + mpf(10) ** -26 * max(1, abs(dg.value))


def test_precision_raises_accuracy():
    with mp.workdps(60):
        r = riemann_zeta(3)
        assert abs(r.value - oracle(mpmath.zeta, mpf(3), dps=90)) < mpf(10) ** -55
