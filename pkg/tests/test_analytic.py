import mpmath
import pytest
from mpmath import mp, mpf

from tornheim.core.analytic import (
    TrigWeights,
    analytic_limit,
    fourier_identity_check,
    prop31_check,
    tornheim_analytic,
    tornheim_two_int,
    zbar_plus_even_residual,
    zbar_plus_odd_limit,
)
from tornheim.core.direct import tornheim_direct
from tornheim.core.integer import tornheim_integer
from tornheim.core.params import ConvergenceError
from tornheim.numeric import Method
from tornheim.specfun import DomainError, PoleError


def test_trig_weights():
    w = TrigWeights.at(mpf("2.5"))
    g = 2 * mpmath.gamma(2.5) / (2 * mp.pi) ** 2.5
    assert abs(w.f_c - g * mpmath.cos(mp.pi * 1.25)) < 1e-28
    assert abs(w.f_s - g * mpmath.sin(mp.pi * 1.25)) < 1e-28
    assert abs(w.lam - mpmath.gamma(-1.5) / (2 * mp.pi) ** -1.5) < 1e-27
    assert w.norm_residual() < 1e-28
    assert TrigWeights.at(3).lam is None
    with pytest.raises(PoleError):
        TrigWeights.at(-2)


@pytest.mark.parametrize("z, q", [("2.5", "0.3"), ("2", "0.25"), ("3.7", "0.81")])
def test_fourier_identities(z, q):
    r = fourier_identity_check(mpf(z), mpf(q))
    assert r.cos_residual < 1e-9 and r.sin_residual < 1e-9
    assert r.tail_bound < 1e-12


def test_fourier_domain():
    with pytest.raises(DomainError):
        fourier_identity_check(1, 0.3)
    with pytest.raises(DomainError):
        fourier_identity_check(2, 1)


@pytest.mark.parametrize("t, tol", [((2, 2, 2), 1e-9), ((3, 3, 2), 1e-9), ((1.5, 1.5, 2.5), 1e-8),
                                    ((2, 4, 2), 1e-9)])
def test_symmetric_relations(t, tol):
    r = prop31_check(*t)
    assert r.sym_residual <= tol
    assert r.nsym_residual <= tol


def test_all_even_reciprocity_is_nontrivial():
    # f_c(2)^3 ~ -1.3e-4 times 3 T(2,2,2)
    r = prop31_check(2, 2, 2)
    assert abs(r.sym_lhs) > 1e-5


@pytest.mark.parametrize("t, value", [
    (("1.5", "1.5", "1.5"), "0.6647173055558972636"),
    (("2.5", "1.5", "2.5"), "0.22870825653631625505"),
    (("1.5", "2.5", "3.5"), "0.10355195880656874095"),
])
def test_explicit_formula_vs_frozen(t, value):
    r = tornheim_analytic(*map(mpf, t))
    assert r.method is Method.ANALYTIC_IJ and r.heuristic
    assert abs(r.value - mpf(value)) < 1e-7


def test_explicit_formula_structural_symmetry():
    x = tornheim_analytic(mpf("1.5"), mpf("2.5"), mpf("1.7"))
    y = tornheim_analytic(mpf("2.5"), mpf("1.5"), mpf("1.7"))
    assert x.value == y.value


def test_explicit_formula_guards():
    with pytest.raises(DomainError):
        tornheim_analytic(2, 1.5, 1.5)
    with pytest.raises(DomainError):
        tornheim_analytic(2 + mpf("1e-4"), 1.5, 1.5)
    with pytest.raises(ConvergenceError):
        tornheim_analytic(0.3, 0.4, 0.5)


@pytest.mark.parametrize("n1, n2, c", [(2, 2, "2.5"), (2, 1, "2.5"), (1, 1, "2.5"), (1, 2, "1.5"),
                                       (3, 1, "0.5")])
def test_two_integer_theorem(n1, n2, c):
    r = tornheim_two_int(n1, n2, mpf(c))
    assert r.method is Method.TWO_INTEGER_LIMIT
    assert abs(r.value - tornheim_direct(n1, n2, mpf(c)).value) < 1e-7


def test_two_integer_guards():
    with pytest.raises(DomainError):
        tornheim_two_int(2, 2, 3)
    with pytest.raises(DomainError):
        tornheim_two_int(0, 2, 2.5)


@pytest.mark.parametrize("t", [(2, 2, 2), (2, 3, 2), (3, 3, 3)])
def test_limit_of_explicit_formula(t):
    lim = analytic_limit(*t)
    assert abs(lim.value - tornheim_integer(*t).value) < 1e-6


@pytest.mark.parametrize("n", [2, 4, 6])
@pytest.mark.parametrize("q", ["0.1", "0.5", "0.83"])
def test_zbar_plus_even(n, q):
    assert zbar_plus_even_residual(n, mpf(q)) < 1e-25


@pytest.mark.parametrize("n", [1, 3, 5])
@pytest.mark.parametrize("q", ["0.2", "0.65"])
def test_zbar_plus_odd_limit(n, q):
    limit, closed = zbar_plus_odd_limit(n, mpf(q))
    assert abs(limit - closed) < 1e-8


def test_zbar_guards():
    with pytest.raises(DomainError):
        zbar_plus_even_residual(3, 0.5)
    with pytest.raises(DomainError):
        zbar_plus_odd_limit(2, 0.5)
