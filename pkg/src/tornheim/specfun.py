"""Scalar special functions at working precision.

Hurwitz zeta and its z-derivatives come from a single Euler-Maclaurin
engine that carries a truncated Taylor expansion in z ("jet"), so values,
first and second derivatives share one code path.  Bernoulli numbers and
polynomial coefficients are exact rationals.
"""

from __future__ import annotations

import functools
import math
import threading
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from tornheim.numeric import Real, eps, to_mpf

__all__ = [
    "DomainError",
    "PoleError",
    "riemann_zeta",
    "riemann_zeta_deriv",
    "hurwitz_zeta",
    "hurwitz_zeta_zderiv",
    "log_gamma",
    "digamma",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_coeffs",
    "harmonic",
    "h",
    "euler_gamma",
    "log_2pi",
    "const_A",
    "const_A_plus",
    "const_A_minus",
]

BERNOULLI_CAP = 256
_MAX_CORRECTIONS = 80
_GUARD_BITS = 24


class DomainError(ValueError):
    """Argument outside the domain of a special function."""


class PoleError(DomainError):
    """Argument sits on a pole."""


# --------------------------------------------------------------------------
# Exact rational pieces
# --------------------------------------------------------------------------

_bern_lock = threading.Lock()
_bern_cache: list[Fraction] = [Fraction(1)]


def _extend_bernoulli(n: int) -> None:
    # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    with _bern_lock:
        while len(_bern_cache) <= n:
            m = len(_bern_cache)
            if m > 1 and m % 2 == 1:
                _bern_cache.append(Fraction(0))
                continue
            acc = Fraction(0)
            for k in range(m):
                bk = _bern_cache[k]
                if bk:
                    acc += math.comb(m + 1, k) * bk
            _bern_cache.append(-acc / (m + 1))


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise DomainError(f"Bernoulli index must be nonnegative, got {n}")
    if n > BERNOULLI_CAP:
        raise DomainError(f"Bernoulli index {n} exceeds cache cap {BERNOULLI_CAP}")
    if n >= len(_bern_cache):
        _extend_bernoulli(n)
    return _bern_cache[n]


@functools.lru_cache(maxsize=None)
def bernoulli_poly_coeffs(n: int) -> tuple[Fraction, ...]:
    """Coefficients of B_n(q) in increasing powers of q."""
    if n < 0:
        raise DomainError(f"degree must be nonnegative, got {n}")
    # B_n(q) = sum_k C(n,k) B_k q^(n-k)
    coeffs = [Fraction(0)] * (n + 1)
    for k in range(n + 1):
        coeffs[n - k] = math.comb(n, k) * bernoulli_number(k)
    return tuple(coeffs)


def bernoulli_poly(n: int, q):
    """B_n(q).  Exact for int/Fraction input, mpf otherwise."""
    coeffs = bernoulli_poly_coeffs(n)
    if isinstance(q, (int, Fraction)):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * q + c
        return acc
    x = to_mpf(q)
    acc = mpf(0)
    for c in reversed(coeffs):
        acc = acc * x + (mpf(c.numerator) / c.denominator if c else 0)
    return acc


def harmonic(n: int) -> Fraction:
    """H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0."""
    if n < 0:
        raise DomainError(f"harmonic index must be nonnegative, got {n}")
    return _harmonic(n)


@functools.lru_cache(maxsize=None)
def _harmonic(n: int) -> Fraction:
    return sum((Fraction(1, k) for k in range(1, n + 1)), Fraction(0))


def h(n: int) -> Fraction:
    """h_n = H_{n-1}; h_1 = 0."""
    if n < 1:
        raise DomainError(f"h_n needs n >= 1, got {n}")
    return _harmonic(n - 1)


# --------------------------------------------------------------------------
# Constants
# --------------------------------------------------------------------------

def euler_gamma() -> mpf:
    return +mp.euler


def log_2pi() -> mpf:
    return mpmath.log(2 * mp.pi)


def const_A() -> mpf:
    """gamma + ln(2 pi)."""
    return mp.euler + log_2pi()


def const_A_plus() -> mpf:
    return const_A() ** 2 + mp.pi ** 2 / 4


def const_A_minus() -> mpf:
    return const_A() ** 2 - mp.pi ** 2 / 4


# --------------------------------------------------------------------------
# Euler-Maclaurin engine for zeta(z, q) with z-jets
# --------------------------------------------------------------------------

def _jet_pow(x: mpf, z: mpf, logx: mpf, order: int) -> list[mpf]:
    """Taylor coefficients in e of x^{-(z+e)}."""
    base = mpmath.power(x, -z)
    out = [base]
    t = base
    for j in range(1, order + 1):
        t = t * (-logx) / j
        out.append(t)
    return out


def _jet_mul(a: list[mpf], b: list[mpf]) -> list[mpf]:
    n = len(a)
    return [mpmath.fsum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def _jet_mul_linear(a: list[mpf], c0: mpf) -> list[mpf]:
    # a(e) * (c0 + e)
    out = [a[0] * c0]
    for k in range(1, len(a)):
        out.append(a[k] * c0 + a[k - 1])
    return out


def _em_hurwitz(z: mpf, q: mpf, order: int) -> tuple[list[mpf], mpf]:
    """Taylor coefficients [zeta, d/dz zeta, (1/2) d2/dz2 zeta, ...] at (z, q).

    Valid for any real z != 1 and q > 0.  Returns (coefficients, error estimate).
    """
    n_req = max(25, int(abs(z)) + 20, int(0.7 * mp.dps) + 5)
    m_direct = max(0, n_req - int(q))
    length = order + 1
    acc = [mpf(0)] * length
    abs_acc = mpf(0)
    for n in range(m_direct):
        x = n + q
        jet = _jet_pow(x, z, mpmath.log(x) if order else mpf(0), order)
        for j in range(length):
            acc[j] += jet[j]
        abs_acc += abs(jet[0])
    big_n = m_direct + q
    log_n = mpmath.log(big_n)
    pw = _jet_pow(big_n, z, log_n, order)
    # integral term N^{1-z-e}/(z-1+e)
    a = z - 1
    inv = [(-1) ** j / a ** (j + 1) for j in range(length)]
    integral = _jet_mul([v * big_n for v in pw], inv)
    for j in range(length):
        acc[j] += integral[j] + pw[j] / 2
    # Bernoulli corrections B_{2k}/(2k)! (z+e)_{2k-1} N^{-z-e-2k+1}
    rising = [z] + [mpf(0)] * order
    if order:
        rising[1] = mpf(1)
    npow = [v * big_n for v in pw]  # N^{-z-e+1}
    inv_n2 = 1 / (big_n * big_n)
    last = mpf(0)
    tol = eps() * (abs(acc[0]) + abs_acc + 1)
    for k in range(1, _MAX_CORRECTIONS + 1):
        npow = [v * inv_n2 for v in npow]
        b = bernoulli_number(2 * k)
        coef = mpf(b.numerator) / b.denominator / mpmath.factorial(2 * k)
        term = [coef * v for v in _jet_mul(rising, npow)]
        for j in range(length):
            acc[j] += term[j]
        last = max(abs(v) for v in term)
        if last <= tol and k >= 2:
            break
        rising = _jet_mul_linear(_jet_mul_linear(rising, z + 2 * k - 1), z + 2 * k)
    err = 2 * last + 8 * eps() * (abs_acc + abs(acc[0])) * (1 + log_n ** order)
    return acc, err


_zeta_cache_lock = threading.Lock()
_zeta_cache: dict = {}


def _hurwitz_taylor(z, q, order: int) -> tuple[list[mpf], mpf]:
    z = to_mpf(z)
    q = to_mpf(q)
    if z == 1:
        raise PoleError("zeta(z, q) has a pole at z = 1")
    if q <= 0:
        raise DomainError(f"q must be positive, got {q}")
    key = (z, q, order, mp.prec)
    hit = _zeta_cache.get(key)
    if hit is not None:
        return hit
    # negative z: direct-sum terms grow like N^{-z} and cancel
    extra = 0
    if z < 0:
        extra = int((1 - z) * math.log2(max(25.0, abs(float(z)) + 20.0) + float(q))) + 8
    with mp.workprec(mp.prec + _GUARD_BITS + extra):
        coeffs, err = _em_hurwitz(z, q, order)
    coeffs = [+c for c in coeffs]
    err = +err + eps() * max(abs(c) for c in coeffs)
    res = (coeffs, err)
    with _zeta_cache_lock:
        if len(_zeta_cache) > 200_000:
            _zeta_cache.clear()
        _zeta_cache[key] = res
    return res


def _check_q(q) -> mpf:
    x = to_mpf(q)
    if not (0 < x <= 1):
        raise DomainError(f"q must lie in (0, 1], got {q}")
    return x


def zeta_raw(z, q) -> mpf:
    """zeta(z, q) as a bare mpf, any q > 0 (internal fast path)."""
    return _hurwitz_taylor(z, q, 0)[0][0]


def zeta_zderiv_raw(z, q) -> mpf:
    """d/dz zeta(z, q) as a bare mpf, any q > 0 (internal fast path)."""
    return _hurwitz_taylor(z, q, 1)[0][1]


def hurwitz_zeta(z, q) -> Real:
    """Analytically continued Hurwitz zeta(z, q) for real z != 1, q in (0, 1]."""
    qq = _check_q(q)
    coeffs, err = _hurwitz_taylor(z, qq, 0)
    return Real(coeffs[0], err)


def hurwitz_zeta_zderiv(z, q) -> Real:
    """Partial derivative of zeta(z, q) with respect to z."""
    qq = _check_q(q)
    coeffs, err = _hurwitz_taylor(z, qq, 1)
    return Real(coeffs[1], err)


def riemann_zeta(s) -> Real:
    """zeta(s) for real s > 1."""
    s = to_mpf(s)
    if s <= 1:
        raise DomainError(f"riemann_zeta needs s > 1, got {s}")
    coeffs, err = _hurwitz_taylor(s, mpf(1), 0)
    return Real(coeffs[0], err)


def riemann_zeta_deriv(s, order: int = 1) -> Real:
    """First or second derivative of zeta at real s > 1."""
    if order not in (1, 2):
        raise DomainError(f"derivative order must be 1 or 2, got {order}")
    s = to_mpf(s)
    if s <= 1:
        raise DomainError(f"riemann_zeta_deriv needs s > 1, got {s}")
    coeffs, err = _hurwitz_taylor(s, mpf(1), order)
    return Real(coeffs[order] * math.factorial(order), err * math.factorial(order))


def zeta_value(s) -> mpf:
    """Riemann zeta at any real s != 1 (internal; no domain restriction)."""
    s = to_mpf(s)
    if s == 0:
        return mpf(-0.5)
    return _hurwitz_taylor(s, mpf(1), 0)[0][0]


def zeta_prime_zero() -> mpf:
    """zeta'(0) = -ln sqrt(2 pi)."""
    return -log_2pi() / 2


# --------------------------------------------------------------------------
# Gamma family
# --------------------------------------------------------------------------

def _stirling_shift() -> int:
    return int(0.6 * mp.dps) + 8


@functools.lru_cache(maxsize=None)
def _stirling_coeffs(prec: int) -> tuple[mpf, ...]:
    with mp.workprec(prec):
        return tuple(
            mpf(bernoulli_number(2 * k).numerator) / bernoulli_number(2 * k).denominator
            / (2 * k * (2 * k - 1))
            for k in range(1, 60)
        )


def _log_gamma_raw(x: mpf) -> tuple[mpf, mpf]:
    shift = _stirling_shift()
    prod = mpf(1)
    y = x
    while y < shift:
        prod *= y
        y += 1
    # ln Gamma(y) = (y - 1/2) ln y - y + ln sqrt(2 pi) + sum B_2k / (2k(2k-1) y^(2k-1))
    val = (y - mpf(0.5)) * mpmath.log(y) - y + log_2pi() / 2
    inv = 1 / y
    inv2 = inv * inv
    p = inv
    tol = eps()
    last = mpf(0)
    for c in _stirling_coeffs(mp.prec):
        term = c * p
        val += term
        last = abs(term)
        if last < tol * abs(val):
            break
        p *= inv2
    val -= mpmath.log(prod)
    return val, last + 4 * eps() * (abs(val) + 1)


@functools.lru_cache(maxsize=1 << 16)
def _log_gamma_cached(x: mpf, prec: int) -> tuple[mpf, mpf]:
    with mp.workprec(prec + _GUARD_BITS):
        v, e = _log_gamma_raw(x)
    v = +v
    return v, +e + eps() * abs(v)


def log_gamma_raw(q) -> mpf:
    """ln Gamma(q) as a bare mpf (internal fast path)."""
    x = to_mpf(q)
    if x <= 0:
        raise DomainError(f"log_gamma needs q > 0, got {q}")
    return _log_gamma_cached(x, mp.prec)[0]


def log_gamma(q) -> Real:
    """ln Gamma(q) for q > 0 via the Stirling series after argument raising."""
    x = to_mpf(q)
    if x <= 0:
        raise DomainError(f"log_gamma needs q > 0, got {q}")
    return Real(*_log_gamma_cached(x, mp.prec))


def _digamma_raw(x: mpf) -> tuple[mpf, mpf]:
    shift = _stirling_shift()
    corr = mpf(0)
    y = x
    while y < shift:
        corr += 1 / y
        y += 1
    # psi(y) = ln y - 1/(2y) - sum B_2k / (2k y^2k)
    val = mpmath.log(y) - 1 / (2 * y)
    inv2 = 1 / (y * y)
    p = inv2
    last = mpf(0)
    for k in range(1, 60):
        b = bernoulli_number(2 * k)
        term = mpf(b.numerator) / b.denominator / (2 * k) * p
        val -= term
        last = abs(term)
        if last < eps() * abs(val):
            break
        p *= inv2
    return val - corr, last + 4 * eps() * (abs(val) + abs(corr))


@functools.lru_cache(maxsize=1 << 16)
def _digamma_cached(x: mpf, prec: int) -> tuple[mpf, mpf]:
    with mp.workprec(prec + _GUARD_BITS):
        v, e = _digamma_raw(x)
    v = +v
    return v, +e + eps() * abs(v)


def digamma_raw(q) -> mpf:
    x = to_mpf(q)
    if x <= 0:
        raise DomainError(f"digamma needs q > 0, got {q}")
    return _digamma_cached(x, mp.prec)[0]


def digamma(q) -> Real:
    """psi(q) = d/dq ln Gamma(q) for q > 0."""
    x = to_mpf(q)
    if x <= 0:
        raise DomainError(f"digamma needs q > 0, got {q}")
    return Real(*_digamma_cached(x, mp.prec))
