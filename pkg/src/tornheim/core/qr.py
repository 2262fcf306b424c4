"""Triple-product integrals Q_j and R_j over (0, 1).

With p_m = psi^{(-m)} the balanced negapolygamma, B_m the Bernoulli
polynomial and A_m(q) = m zeta'(1-m, q):

    Q1 = <B B B>          R1 = <B B B>
    Q2 = <B B p>          R2 = <B B A> / pi
    Q3 = <p p B>          R3 = <A A B> / pi^2
    Q4 = <p p(1-q) B>     R4 = <A A(1-q) B> / pi^2
    Q5 = <p p p>          R5 = <A A A> / pi^3
    Q6 = <p p p(1-q)>     R6 = <A A A(1-q)> / pi^3

Q1 is exact, Q2 has a closed form, Q3..Q6 follow from integration-by-parts
recurrences down to bases built from the integrals K, K*, Z, Z* (quadrature)
and N, M, M* (closed form).  R_j follows from Q_j through
A_m = m! p_m + h_m B_m.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction

from mpmath import mp, mpf

from tornheim.bernoulli_algebra import integral_BBB
from tornheim.numeric import EvalResult, Method, Real, get_precision
from tornheim.polygamma_neg import bernoulli_A_raw, negapolygamma_raw
from tornheim.quadrature import (
    QuadratureConfig,
    integral_K,
    integral_Kstar,
    integral_M,
    integral_Mstar,
    integral_N,
    integral_Z,
    integral_Zstar,
    integrate_01,
)
from tornheim.specfun import (
    DomainError,
    bernoulli_number,
    bernoulli_poly,
    euler_gamma,
    h,
    log_2pi,
    riemann_zeta,
    riemann_zeta_deriv,
    zeta_prime_zero,
)

__all__ = [
    "q1_exact",
    "q2_closed",
    "q_integral",
    "q_direct",
    "q_recurrence_residual",
    "r_integral",
    "r_direct",
    "clear_cache",
]

_lock = threading.Lock()
_cache: dict[tuple, EvalResult] = {}


def clear_cache() -> None:
    with _lock:
        _cache.clear()


def _key(*parts, cfg: QuadratureConfig | None) -> tuple:
    return (*parts, cfg, get_precision())


def _cached(key: tuple, compute) -> EvalResult:
    with _lock:
        hit = _cache.get(key)
    if hit is not None:
        return hit
    value = compute()
    with _lock:
        _cache.setdefault(key, value)
    return value


def _check(n1: int, n2: int, n3: int) -> None:
    if min(n1, n2, n3) < 1:
        raise DomainError(f"indices must be positive integers, got ({n1}, {n2}, {n3})")


def _frac(x: Fraction) -> mpf:
    return mpf(x.numerator) / x.denominator


# -------------------------------------------------------------------------
# Q1, Q2
# -------------------------------------------------------------------------

def q1_exact(n1: int, n2: int, n3: int) -> Fraction:
    _check(n1, n2, n3)
    return integral_BBB(n1, n2, n3)


def q2_closed(n1: int, n2: int, n3: int) -> EvalResult:
    """Q2(n1, n2, n3) = <B_{n1} B_{n2} psi^{(-n3)}> in closed form.

    The product B_{n1} B_{n2} is expanded in Bernoulli polynomials; each term
    integrates against psi^{(-n3)} to zeta values at alpha - 2k.  For odd
    alpha = n1 + n2 + n3 the cosine part drops out and only zeta values remain.
    """
    _check(n1, n2, n3)
    alpha = n1 + n2 + n3
    kmax = max(n1 // 2, n2 // 2)
    odd = alpha % 2 == 1
    if odd:
        big_n = (alpha - 1) // 2
        terms = Real.exact(0)
        for k in range(kmax + 1):
            w = n1 * math.comb(n2, 2 * k) + n2 * math.comb(n1, 2 * k)
            if not w:
                continue
            c = Fraction(w * math.factorial(n1 + n2 - 2 * k - 1) * (-1) ** k) * bernoulli_number(2 * k)
            terms = terms + riemann_zeta(alpha - 2 * k) * c / (2 * mp.pi) ** (alpha - 2 * k)
        value = terms * mp.pi * (-1) ** (big_n + n3)
        return EvalResult.of(value, Method.CLOSED_FORM)
    sin_a = 0
    cos_a = (-1) ** (alpha // 2)
    big_a = euler_gamma() + log_2pi()
    terms = Real.exact(0)
    for k in range(kmax + 1):
        w = n1 * math.comb(n2, 2 * k) + n2 * math.comb(n1, 2 * k)
        if not w:
            continue
        c = Fraction(w * math.factorial(n1 + n2 - 2 * k - 1) * (-1) ** k) * bernoulli_number(2 * k)
        s = alpha - 2 * k
        z, zp = riemann_zeta(s), riemann_zeta_deriv(s, 1)
        brace = mp.pi / 2 * sin_a * z - cos_a * (big_a * z - zp)
        terms = terms + brace * c / (2 * mp.pi) ** s
    value = terms * 2 * (-1) ** n3
    return EvalResult.of(value, Method.CLOSED_FORM)


# -------------------------------------------------------------------------
# Bases
# -------------------------------------------------------------------------

def _base_q3(m: int, n: int, cfg) -> EvalResult:
    """Q3(1, m, n) = K_{m,n} + zeta'(0) N_{m,n}."""
    def f():
        k = integral_K(m, n, cfg)
        return EvalResult.of(k + zeta_prime_zero() * integral_N(m, n), Method.QUADRATURE, True)
    return _cached(_key("q3base", m, n, cfg=cfg), f)


def _base_q4(m: int, n: int, cfg) -> EvalResult:
    """Q4(1, m, n) = K*_{m,n} + zeta'(0) (-1)^n N_{m,n}."""
    def f():
        k = integral_Kstar(m, n, cfg)
        return EvalResult.of(k + zeta_prime_zero() * (-1) ** n * integral_N(m, n),
                             Method.QUADRATURE, True)
    return _cached(_key("q4base", m, n, cfg=cfg), f)


def _base_q5(m: int, n: int, cfg) -> EvalResult:
    """Q5(1, m, n) = Z_{m,n} + zeta'(0) M_{m,n}."""
    m, n = min(m, n), max(m, n)

    def f():
        z = integral_Z(m, n, cfg)
        return EvalResult.of(z + zeta_prime_zero() * integral_M(m, n), Method.QUADRATURE, True)
    return _cached(_key("q5base", m, n, cfg=cfg), f)


def _base_q6(m: int, n: int, cfg) -> EvalResult:
    """Q6(1, m, n) = Z*_{m,n} + zeta'(0) M*_{m,n}."""
    def f():
        z = integral_Zstar(m, n, cfg)
        return EvalResult.of(z + zeta_prime_zero() * integral_Mstar(m, n), Method.QUADRATURE, True)
    return _cached(_key("q6base", m, n, cfg=cfg), f)


# -------------------------------------------------------------------------
# Recurrences
# -------------------------------------------------------------------------

def _q3(n1: int, n2: int, n3: int, cfg) -> Real:
    if n1 > n2:
        n1, n2 = n2, n1
    if n1 == 1:
        return _base_q3(n2, n3, cfg)
    # (n3+1) Q3(n1,n2,n3) = -Q3(n1-1,n2,n3+1) - Q3(n1,n2-1,n3+1)
    return -(_q3(n1 - 1, n2, n3 + 1, cfg) + _q3(n1, n2 - 1, n3 + 1, cfg)) / (n3 + 1)


def _q4(n1: int, n2: int, n3: int, cfg) -> Real:
    if n1 == 1:
        return _base_q4(n2, n3, cfg)
    if n2 == 1:
        # q -> 1 - q swaps the negapolygammas and reflects B_{n3}
        return (-1) ** n3 * _base_q4(n1, n3, cfg)
    # (n3+1) Q4(n1,n2,n3) = -Q4(n1-1,n2,n3+1) + Q4(n1,n2-1,n3+1)
    return (-_q4(n1 - 1, n2, n3 + 1, cfg) + _q4(n1, n2 - 1, n3 + 1, cfg)) / (n3 + 1)


def _q5(n1: int, n2: int, n3: int, cfg) -> Real:
    idx = sorted((n1, n2, n3))
    if idx[0] == 1:
        return _base_q5(idx[1], idx[2], cfg)
    n1, n2, n3 = idx
    # Q5(n1,n2,n3) = -Q5(n1-1,n2,n3+1) - Q5(n1,n2-1,n3+1)
    return -(_q5(n1 - 1, n2, n3 + 1, cfg) + _q5(n1, n2 - 1, n3 + 1, cfg))


def _q6(n1: int, n2: int, n3: int, cfg) -> Real:
    if n1 > n2:
        n1, n2 = n2, n1
    if n1 == 1:
        return _base_q6(n2, n3, cfg)
    # Q6(n1,n2,n3) = Q6(n1-1,n2,n3+1) + Q6(n1,n2-1,n3+1)
    return _q6(n1 - 1, n2, n3 + 1, cfg) + _q6(n1, n2 - 1, n3 + 1, cfg)


_RECURSIVE = {3: _q3, 4: _q4, 5: _q5, 6: _q6}


def q_integral(j: int, n1: int, n2: int, n3: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """Q_j(n1, n2, n3) for j = 1..6."""
    _check(n1, n2, n3)
    if j == 1:
        return EvalResult(_frac(q1_exact(n1, n2, n3)), 0, Method.EXACT)
    if j == 2:
        return _cached(_key("q2", n1, n2, n3, cfg=None), lambda: q2_closed(n1, n2, n3))
    if j not in _RECURSIVE:
        raise DomainError(f"Q_j is defined for j = 1..6, got j = {j}")

    def f():
        return EvalResult.of(_RECURSIVE[j](n1, n2, n3, cfg), Method.RECURRENCE, heuristic=True)
    return _cached(_key("q", j, n1, n2, n3, cfg=cfg), f)


def _psi(m: int, q) -> mpf:
    return negapolygamma_raw(m, q)


def q_direct(j: int, n1: int, n2: int, n3: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """Q_j(n1, n2, n3) by quadrature of its definition."""
    _check(n1, n2, n3)
    B = bernoulli_poly
    integrands = {
        1: lambda q, qc: B(n1, q) * B(n2, q) * B(n3, q),
        2: lambda q, qc: B(n1, q) * B(n2, q) * _psi(n3, q),
        3: lambda q, qc: _psi(n1, q) * _psi(n2, q) * B(n3, q),
        4: lambda q, qc: _psi(n1, q) * _psi(n2, qc) * B(n3, q),
        5: lambda q, qc: _psi(n1, q) * _psi(n2, q) * _psi(n3, q),
        6: lambda q, qc: _psi(n1, q) * _psi(n2, q) * _psi(n3, qc),
    }
    if j not in integrands:
        raise DomainError(f"Q_j is defined for j = 1..6, got j = {j}")
    return integrate_01(integrands[j], cfg, complement=True)


def q_recurrence_residual(j: int, n1: int, n2: int, n3: int,
                          cfg: QuadratureConfig | None = None) -> mpf:
    """Residual of the recurrence for Q_j (j = 3..6) with every value from q_direct."""
    if j not in _RECURSIVE or n1 < 2 or n2 < 2:
        raise DomainError(f"recurrence needs j in 3..6 and n1, n2 >= 2, got j={j}, ({n1}, {n2})")
    here = q_direct(j, n1, n2, n3, cfg).value
    lo1 = q_direct(j, n1 - 1, n2, n3 + 1, cfg).value
    lo2 = q_direct(j, n1, n2 - 1, n3 + 1, cfg).value
    if j == 3:
        return abs((n3 + 1) * here + lo1 + lo2)
    if j == 4:
        return abs((n3 + 1) * here + lo1 - lo2)
    if j == 5:
        return abs(here + lo1 + lo2)
    return abs(here - lo1 - lo2)


# -------------------------------------------------------------------------
# R from Q
# -------------------------------------------------------------------------

def r_integral(j: int, n1: int, n2: int, n3: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """R_j(n1, n2, n3) assembled from Q-integrals.

    The arguments are first put in the orientation that makes the symmetry in
    (n1, n2) structural: swapping them yields the identical computation
    (with the sign (-1)^{n3} for R4).
    """
    _check(n1, n2, n3)
    sign = 1
    if n1 > n2:
        if j == 4 and n3 % 2:
            sign = -1
        n1, n2 = n2, n1

    def f():
        return EvalResult.of(_r_from_q(j, n1, n2, n3, cfg), Method.RECURRENCE,
                             heuristic=j >= 3)
    r = _cached(_key("r", j, n1, n2, n3, cfg=cfg), f)
    return r if sign == 1 else EvalResult(-r.value, r.err, r.method, r.heuristic)


def _r_from_q(j: int, n1: int, n2: int, n3: int, cfg) -> Real:
    def Q(i: int, a: int, b: int, c: int) -> Real:
        return q_integral(i, a, b, c, cfg)

    f1, f2, f3 = (math.factorial(n) for n in (n1, n2, n3))
    h1, h2, h3 = (h(n) for n in (n1, n2, n3))
    pi = mp.pi
    if j == 1:
        return Q(1, n1, n2, n3)
    if j == 2:
        return (f3 * Q(2, n1, n2, n3) + h3 * Q(1, n1, n2, n3)) / pi
    if j == 3:
        total = f1 * f2 * Q(3, n1, n2, n3)
        if h1:
            total = total + f2 * h1 * Q(2, n1, n3, n2)
        if h2:
            total = total + f1 * h2 * Q(2, n2, n3, n1)
        if h1 and h2:
            total = total + h1 * h2 * Q(1, n1, n2, n3)
        return total / pi ** 2
    if j == 4:
        total = f1 * f2 * Q(4, n1, n2, n3)
        if h2:
            total = total + (-1) ** n2 * f1 * h2 * Q(2, n2, n3, n1)
        if h1:
            total = total + (-1) ** (n1 + n3) * f2 * h1 * Q(2, n1, n3, n2)
        if h1 and h2:
            total = total + (-1) ** n2 * h1 * h2 * Q(1, n1, n2, n3)
        return total / pi ** 2
    if j == 5:
        total = f1 * f2 * f3 * Q(5, n1, n2, n3)
        if h3:
            total = total + f1 * f2 * h3 * Q(3, n1, n2, n3)
        if h2:
            total = total + f1 * f3 * h2 * Q(3, n1, n3, n2)
        if h1:
            total = total + f2 * f3 * h1 * Q(3, n2, n3, n1)
        if h2 and h3:
            total = total + f1 * h2 * h3 * Q(2, n2, n3, n1)
        if h1 and h3:
            total = total + f2 * h1 * h3 * Q(2, n1, n3, n2)
        if h1 and h2:
            total = total + f3 * h1 * h2 * Q(2, n1, n2, n3)
        if h1 and h2 and h3:
            total = total + h1 * h2 * h3 * Q(1, n1, n2, n3)
        return total / pi ** 3
    if j == 6:
        s3 = (-1) ** n3
        total = f1 * f2 * f3 * Q(6, n1, n2, n3)
        if h3:
            total = total + s3 * f1 * f2 * h3 * Q(3, n1, n2, n3)
        if h2:
            total = total + f1 * f3 * h2 * Q(4, n1, n3, n2)
        if h1:
            total = total + f2 * f3 * h1 * Q(4, n2, n3, n1)
        if h2 and h3:
            total = total + s3 * f1 * h2 * h3 * Q(2, n2, n3, n1)
        if h1 and h3:
            total = total + s3 * f2 * h1 * h3 * Q(2, n1, n3, n2)
        if h1 and h2:
            total = total + (-1) ** (n1 + n2) * f3 * h1 * h2 * Q(2, n1, n2, n3)
        if h1 and h2 and h3:
            total = total + s3 * h1 * h2 * h3 * Q(1, n1, n2, n3)
        return total / pi ** 3
    raise DomainError(f"R_j is defined for j = 1..6, got j = {j}")


def r_direct(j: int, n1: int, n2: int, n3: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """R_j(n1, n2, n3) by quadrature of its definition with A_k(q) = k zeta'(1-k, q)."""
    _check(n1, n2, n3)
    A, B = bernoulli_A_raw, bernoulli_poly
    integrands = {
        1: (lambda q, qc: B(n1, q) * B(n2, q) * B(n3, q), 0),
        2: (lambda q, qc: B(n1, q) * B(n2, q) * A(n3, q), 1),
        3: (lambda q, qc: A(n1, q) * A(n2, q) * B(n3, q), 2),
        4: (lambda q, qc: A(n1, q) * A(n2, qc) * B(n3, q), 2),
        5: (lambda q, qc: A(n1, q) * A(n2, q) * A(n3, q), 3),
        6: (lambda q, qc: A(n1, q) * A(n2, q) * A(n3, qc), 3),
    }
    if j not in integrands:
        raise DomainError(f"R_j is defined for j = 1..6, got j = {j}")
    f, k = integrands[j]
    return EvalResult.of(integrate_01(f, cfg, complement=True) / mp.pi ** k,
                         Method.QUADRATURE, heuristic=True)
