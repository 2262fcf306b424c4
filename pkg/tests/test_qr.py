from fractions import Fraction

import mpmath
import pytest
from mpmath import mpf

from tornheim.core.qr import (
    clear_cache,
    q1_exact,
    q2_closed,
    q_direct,
    q_integral,
    q_recurrence_residual,
    r_direct,
    r_integral,
)
from tornheim.numeric import Method
from tornheim.specfun import DomainError


def test_q1_exact():
    assert q1_exact(1, 1, 2) == Fraction(1, 180)
    r = q_integral(1, 1, 1, 2)
    assert r.method is Method.EXACT and r.err == 0


def test_q1_vs_quadrature():
    assert abs(q_direct(1, 2, 3, 3).value - mpf(q1_exact(2, 3, 3).numerator) / q1_exact(2, 3, 3).denominator) < 1e-20


@pytest.mark.parametrize("t", [(2, 2, 1), (1, 1, 1), (2, 2, 3), (1, 2, 2), (3, 2, 4), (4, 4, 1)])
def test_q2_closed_vs_quadrature(t):
    assert abs(q2_closed(*t).value - q_direct(2, *t).value) < 1e-10


@pytest.mark.parametrize("j", [3, 4, 5, 6])
@pytest.mark.parametrize("t", [(1, 1, 1), (1, 2, 3), (2, 2, 2), (3, 1, 2), (2, 3, 1)])
def test_q_recursive_vs_quadrature(j, t):
    assert abs(q_integral(j, *t).value - q_direct(j, *t).value) < 1e-10


@pytest.mark.parametrize("j", [3, 4, 5, 6])
@pytest.mark.parametrize("t", [(2, 2, 2), (2, 3, 1), (3, 3, 1)])
def test_recurrences_by_quadrature(j, t):
    assert q_recurrence_residual(j, *t) < 1e-8


def test_recurrence_domain():
    with pytest.raises(DomainError):
        q_recurrence_residual(2, 2, 2, 2)
    with pytest.raises(DomainError):
        q_recurrence_residual(3, 1, 2, 2)


@pytest.mark.parametrize("j", range(1, 7))
@pytest.mark.parametrize("t", [(1, 1, 2), (2, 2, 1), (1, 3, 2), (2, 3, 3)])
def test_r_from_q_vs_definition(j, t):
    assert abs(r_integral(j, *t).value - r_direct(j, *t).value) < 1e-8


@pytest.mark.parametrize("j", range(1, 7))
def test_r_swap_symmetry(j):
    a = r_integral(j, 1, 3, 3).value
    b = r_integral(j, 3, 1, 3).value
    sign = -1 if j == 4 else 1
    assert b == sign * a


def test_cache_is_transparent():
    first = q_integral(5, 2, 2, 2).value
    clear_cache()
    assert q_integral(5, 2, 2, 2).value == first


def test_index_errors():
    with pytest.raises(DomainError):
        q_integral(7, 1, 1, 1)
    with pytest.raises(DomainError):
        q_direct(3, 0, 1, 1)
    with pytest.raises(DomainError):
        r_integral(0, 1, 1, 1)
    with pytest.raises(DomainError):
        r_direct(7, 1, 1, 1)


def test_q5_fully_symmetric():
    a = q_direct(5, 1, 2, 3).value
    assert abs(a - q_direct(5, 3, 1, 2).value) < 1e-15
    assert abs(a - q_integral(5, 2, 3, 1).value) < 1e-10


def test_q2_alpha_odd_vs_mpmath_quad():
    # psi^(-1)(q) = zeta'(0, q); mpmath quadrature as the oracle
    ref = mpmath.quad(lambda q: mpmath.bernpoly(2, q) ** 2 * mpmath.zeta(0, q, 1), [0, 0.5, 1])
    assert abs(q2_closed(2, 2, 1).value - ref) < 1e-15
