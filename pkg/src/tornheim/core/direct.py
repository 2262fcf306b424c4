"""Brute-force evaluation of T(a, b, c) and of the double zeta value zeta(c, a).

The double series is regrouped along diagonals s = n + m:

    T(a, b, c) = sum_{s >= 2} s^{-c} g(s),   g(s) = sum_{n=1}^{s-1} n^{-a} (s-n)^{-b}.

Diagonals up to S are summed exactly.  For s > S the inner sum is replaced
by its large-s expansion

    g(s) ~ B(1-a, 1-b) s^{1-a-b}
           + sum_j [(b)_j / j! zeta(a-j) s^{-b-j} + (a)_j / j! zeta(b-j) s^{-a-j}],

and the s-sums of the powers are Hurwitz zeta values zeta(x, S+1).  At integer
a or b the individual terms have cancelling poles; the tail is then taken as
the symmetric average of two nearby non-integer parameter points, evaluated at
raised precision (error O(eps^2)).
"""

from __future__ import annotations

import math

import mpmath
from mpmath import mp, mpf

from tornheim.core.params import ConvergenceError, ParamTriple
from tornheim.numeric import EvalResult, Method, eps, to_mpf
from tornheim.specfun import euler_gamma, zeta_raw, zeta_value, zeta_zderiv_raw, bernoulli_number

__all__ = ["tornheim_direct", "inner_sum", "inner_sum_asymptotic", "mzv_direct", "mzv_check",
           "TruncationError"]

DEFAULT_MAX_TERMS = 2_000_000
_EXTRA_DIGITS = 50
_PERTURB = mpf(10) ** -22
_MAX_J = 60


class TruncationError(RuntimeError):
    """The requested accuracy needs more diagonal terms than allowed."""


def _near_int(x: mpf) -> bool:
    return abs(x - mpmath.nint(x)) < mpf(10) ** -8


def inner_sum(a, b, s: int) -> mpf:
    """g(s) = sum_{n=1}^{s-1} n^{-a} (s-n)^{-b}, summed term by term."""
    a, b = to_mpf(a), to_mpf(b)
    return mpmath.fsum(mpmath.power(n, -a) * mpmath.power(s - n, -b) for n in range(1, s))


def _rising_over_fact(x: mpf, j: int) -> mpf:
    return mpmath.rf(x, j) / math.factorial(j)


def _tail_terms(a: mpf, b: mpf, c: mpf, start: int, n_terms: int) -> tuple[mpf, mpf]:
    """sum_{s >= start} s^{-c} g_asym(s) for non-integer a, b; returns (value, last term)."""
    q = mpf(start)
    total = mpmath.beta(1 - a, 1 - b) * zeta_raw(a + b + c - 1, q)
    last = mpf(0)
    for j in range(n_terms + 1):
        t1 = _rising_over_fact(b, j) * zeta_value(a - j) * zeta_raw(b + c + j, q)
        t2 = _rising_over_fact(a, j) * zeta_value(b - j) * zeta_raw(a + c + j, q)
        total += t1 + t2
        last = abs(t1) + abs(t2)
    return total, last


def _tail(a: mpf, b: mpf, c: mpf, start: int, n_terms: int) -> tuple[mpf, mpf]:
    if not (_near_int(a) or _near_int(b)):
        with mp.workdps(mp.dps + 10):
            v, last = _tail_terms(a, b, c, start, n_terms)
        return +v, +last
    with mp.workdps(mp.dps + _EXTRA_DIGITS):
        e = _PERTURB
        r2 = mpmath.sqrt(2)
        v1, l1 = _tail_terms(a + e, b + r2 * e, c, start, n_terms)
        v2, l2 = _tail_terms(a - e, b - r2 * e, c, start, n_terms)
        v = (v1 + v2) / 2
        # second-order remainder of the symmetric average
        last = max(l1, l2) + abs(v1 - v2) * e
    return +v, +last


def inner_sum_asymptotic(a, b, s: int, n_terms: int = 20) -> mpf:
    """Large-s expansion of g(s) at non-integer a, b (for testing the tail)."""
    a, b = to_mpf(a), to_mpf(b)
    x = mpf(s)
    total = mpmath.beta(1 - a, 1 - b) * x ** (1 - a - b)
    for j in range(n_terms + 1):
        total += _rising_over_fact(b, j) * zeta_value(a - j) * x ** (-b - j)
        total += _rising_over_fact(a, j) * zeta_value(b - j) * x ** (-a - j)
    return total


def _diagonal_partial(a: mpf, b: mpf, c: mpf, big_s: int) -> mpf:
    pa = [mpf(0)] + [mpmath.power(n, -a) for n in range(1, big_s)]
    pb = [mpf(0)] + [mpmath.power(n, -b) for n in range(1, big_s)]
    total = mpf(0)
    for s in range(2, big_s + 1):
        g = mpmath.fsum(pa[n] * pb[s - n] for n in range(1, s))
        total += mpmath.power(s, -c) * g
    return total


def tornheim_direct(a, b, c, tol=None, max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """T(a, b, c) by diagonal summation with an asymptotic tail.

    The error estimate is the size of the last tail term kept plus roundoff;
    it is heuristic since the expansion is asymptotic.  The default ``tol``
    is 1e-20 or 1000 ulp, whichever is larger.
    """
    p = ParamTriple(a, b, c)
    p.require_convergent()
    av, bv, cv = p.values
    tol = max(mpf("1e-20"), 1000 * eps()) if tol is None else mpf(tol)
    big_s = 64
    while True:
        if big_s * big_s // 2 > max_terms:
            raise TruncationError(
                f"{p}: tail estimate above {mpmath.nstr(tol, 3)} within {max_terms} terms")
        with mp.workdps(mp.dps + 10):
            head = _diagonal_partial(av, bv, cv, big_s)
            n_terms = min(_MAX_J, max(12, int(mp.dps * 0.8)))
            tail, last = _tail(av, bv, cv, big_s + 1, n_terms)
            value = head + tail
        err = last + 100 * eps() * abs(value)
        if err <= tol or big_s >= 4096:
            if err > tol:
                raise TruncationError(f"{p}: tail estimate {mpmath.nstr(err, 3)} above tolerance")
            return EvalResult(+value, err, Method.DIRECT_SUM, heuristic=True)
        big_s *= 2


# -------------------------------------------------------------------------
# Double zeta values zeta(c, a) = sum_{n1 > n2 >= 1} n1^{-c} n2^{-a}
# -------------------------------------------------------------------------

def mzv_direct(c: int, a: int, n_head: int = 200) -> EvalResult:
    """zeta(c, a) by summing n1^{-c} H_{n1-1}^{(a)} with an Euler-Maclaurin tail.

    The head sum runs over n1 <= n_head; the tail expands H_{n-1}^{(a)} in
    powers of 1/n, and sums of those powers are Hurwitz zeta values.
    """
    if c < 2 or a < 1:
        raise ConvergenceError(f"zeta({c}, {a}) needs c >= 2 and a >= 1")
    with mp.workdps(mp.dps + 10):
        head = mpf(0)
        h = mpf(0)
        for n in range(1, n_head + 1):
            head += mpmath.power(n, -c) * h
            h += mpmath.power(n, -a)
        q = mpf(n_head + 1)
        last = mpf(0)
        if a == 1:
            # H_{n-1} = ln n + gamma - 1/(2n) - sum_k B_2k / (2k n^2k)
            tail = euler_gamma() * zeta_raw(c, q) - zeta_zderiv_raw(c, q) - zeta_raw(c + 1, q) / 2
            for k in range(1, 30):
                b = bernoulli_number(2 * k)
                term = mpf(b.numerator) / b.denominator / (2 * k) * zeta_raw(c + 2 * k, q)
                tail -= term
                last = abs(term)
                if last < eps() * abs(tail):
                    break
        else:
            # H_{n-1}^{(a)} = zeta(a) - zeta(a, n)
            tail = zeta_value(a) * zeta_raw(c, q)
            tail -= zeta_raw(a + c - 1, q) / (a - 1) + zeta_raw(a + c, q) / 2
            for k in range(1, 30):
                b = bernoulli_number(2 * k)
                term = (mpf(b.numerator) / b.denominator / mpmath.factorial(2 * k)
                        * mpmath.rf(a, 2 * k - 1) * zeta_raw(a + c + 2 * k - 1, q))
                tail -= term
                last = abs(term)
                if last < eps() * abs(tail):
                    break
        value = head + tail
    return EvalResult(+value, last + 100 * eps() * abs(value), Method.MZV_DIRECT, heuristic=True)


def mzv_check(a: int, c: int) -> mpf:
    """|T(a, 0, c) by diagonal summation - zeta(c, a) by nested summation|."""
    t = tornheim_direct(a, 0, c)
    z = mzv_direct(c, a)
    return abs(t.value - z.value)
