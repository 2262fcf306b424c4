"""Bernoulli functions A_k(q) and the balanced negapolygamma functions.

    A_k(q)        = k * d/dz zeta(z, q) at z = 1 - k
    psi^{(-m)}(q) = (A_m(q) - H_{m-1} B_m(q)) / m!

psi^{(-1)} = ln Gamma + zeta'(0); for m >= 2 the functions are balanced
(zero mean on (0, 1), equal endpoint values) and d/dq psi^{(-m)} = psi^{(-m+1)}.
"""

from __future__ import annotations

import math

from mpmath import mpf

from tornheim.numeric import Real, to_mpf
from tornheim.specfun import (
    DomainError,
    bernoulli_poly,
    harmonic,
    hurwitz_zeta_zderiv,
    zeta_zderiv_raw,
)

__all__ = [
    "ENDPOINT_EPS",
    "bernoulli_A",
    "negapolygamma",
    "negapolygamma_derivative_check",
    "bernoulli_A_raw",
    "negapolygamma_raw",
]

ENDPOINT_EPS = 1e-12


def bernoulli_A_raw(k: int, q) -> mpf:
    """A_k(q) as a bare mpf; q > 0 (internal fast path)."""
    return k * zeta_zderiv_raw(1 - k, q)


def bernoulli_A(k: int, q) -> Real:
    """A_k(q) = k zeta'(1 - k, q) for k >= 1 and q in (0, 1]."""
    if k < 1:
        raise DomainError(f"A_k needs k >= 1, got {k}")
    return k * hurwitz_zeta_zderiv(1 - k, q)


def negapolygamma_raw(m: int, q) -> mpf:
    """psi^{(-m)}(q) as a bare mpf (internal fast path, no endpoint checks)."""
    x = to_mpf(q)
    hm = harmonic(m - 1)
    val = m * zeta_zderiv_raw(1 - m, x)
    if hm:
        val -= mpf(hm.numerator) / hm.denominator * bernoulli_poly(m, x)
    return val / math.factorial(m)


def negapolygamma(m: int, q) -> Real:
    """Balanced negapolygamma psi^{(-m)}(q) for m >= 1, q in (0, 1).

    m = 1 diverges logarithmically at q -> 0; both endpoints are rejected
    for m = 1.  For m >= 2 the closed interval is accepted.
    """
    if m < 1:
        raise DomainError(f"negapolygamma order must be >= 1, got {m}")
    x = to_mpf(q)
    if m == 1 and not (0 < x < 1):
        raise DomainError(f"psi^(-1) is singular at q = {q}; keep q in (0, 1)")
    if not (0 <= x <= 1):
        raise DomainError(f"q must lie in [0, 1], got {q}")
    if x == 0:
        # balanced: psi^{(-m)}(0) = psi^{(-m)}(1)
        x = mpf(1)
    a = bernoulli_A(m, x)
    hm = harmonic(m - 1)
    return (a - Real.exact(hm) * Real.exact(bernoulli_poly(m, x))) / math.factorial(m)


def negapolygamma_derivative_check(m: int, q, delta=mpf("1e-5")) -> mpf:
    """|central difference of psi^{(-m)} at q - psi^{(-m+1)}(q)|.

    The residual is O(delta^2) when the derivative ladder holds.
    """
    if m < 2:
        raise DomainError(f"derivative ladder needs m >= 2, got {m}")
    x = to_mpf(q)
    d = to_mpf(delta)
    fd = (negapolygamma_raw(m, x + d) - negapolygamma_raw(m, x - d)) / (2 * d)
    return abs(fd - negapolygamma_raw(m - 1, x))
