"""Tanh-sinh quadrature on (0, 1) and the catalog of integrals over (0, 1).

The engine integrates functions with integrable logarithmic or algebraic
endpoint singularities (ln Gamma, ln sin, zeta(1 - a, q) with a < 1) by the
double-exponential substitution q = 1 / (1 + exp(-pi sinh t)).  Levels halve
the step; the estimate is accepted once two successive levels agree to
``target_tol``.  Integrands may ask for the accurately computed complement
1 - q, which avoids cancellation when evaluating f(1 - q) near q = 1.

Closed forms are provided for N, M, M* and the two-zeta integrals; the
K, K*, Z, Z*, U families and I, J are quadrature-only.
"""

from __future__ import annotations

import enum
import math
import threading
from dataclasses import dataclass
from typing import Callable

import mpmath
from mpmath import mp, mpf

from tornheim.numeric import EvalResult, Method, Real, eps, to_mpf
from tornheim.polygamma_neg import negapolygamma_raw
from tornheim.specfun import (
    DomainError,
    PoleError,
    bernoulli_poly,
    const_A,
    const_A_minus,
    const_A_plus,
    euler_gamma,
    log_2pi,
    log_gamma,
    log_gamma_raw,
    riemann_zeta,
    riemann_zeta_deriv,
    zeta_raw,
)

__all__ = [
    "QuadratureConfig",
    "QuadratureError",
    "integrate_01",
    "IntegralFamily",
    "IntegralId",
    "zeta_bar",
    "zeta_bar_plus",
    "integral_I",
    "integral_J",
    "integral_N",
    "integral_N_quad",
    "integral_M",
    "integral_M_quad",
    "integral_Mstar",
    "integral_Mstar_quad",
    "integral_K",
    "integral_Kstar",
    "integral_Z",
    "integral_Zstar",
    "integral_U",
    "two_zeta_integral",
    "two_zeta_integral_quad",
    "loggamma_moments_check",
]


class QuadratureError(RuntimeError):
    """Raised when successive levels fail to agree within the level budget."""

    def __init__(self, message: str, estimate: mpf, levels: int, last_diff: mpf):
        super().__init__(message)
        self.estimate = estimate
        self.levels = levels
        self.last_diff = last_diff


@dataclass(frozen=True)
class QuadratureConfig:
    target_tol: float = 1e-12
    max_levels: int = 9
    endpoint_clip: float = 1e-25
    min_levels: int = 3

    def __post_init__(self) -> None:
        if not self.target_tol > 0:
            raise ValueError("target_tol must be positive")
        if not (0 < self.endpoint_clip <= 1e-6):
            raise ValueError("endpoint_clip must lie in (0, 1e-6]")
        if self.max_levels < 1:
            raise ValueError("max_levels must be positive")


DEFAULT_CONFIG = QuadratureConfig()

# -------------------------------------------------------------------------
# Engine
# -------------------------------------------------------------------------

_node_lock = threading.Lock()
_node_cache: dict = {}


def _nodes(level: int, clip: float) -> list[tuple[mpf, mpf, mpf]]:
    """New nodes of a level: (q, 1 - q, dq/dt) for t > 0 on the level's odd grid.

    Level 0 holds t = 0, 1, 2, ...; level k >= 1 holds the odd multiples of 2^-k.
    The mirror node at -t is (1 - q, q) with the same weight.
    """
    key = (level, clip, mp.prec)
    hit = _node_cache.get(key)
    if hit is not None:
        return hit
    h = mpf(2) ** (-level)
    clip_m = mpf(clip)
    out = []
    j = 1
    while True:
        t = j * h
        u = mp.pi * mpmath.sinh(t)
        e = mpmath.exp(-u)
        small = e / (1 + e)  # 1 / (1 + e^u)
        if small < clip_m:
            break
        big = 1 / (1 + e)
        w = mp.pi * mpmath.cosh(t) * small * big
        out.append((small, big, w))
        j += 1 if level == 0 else 2
    with _node_lock:
        _node_cache[key] = out
    return out


def _level_sum(f, level: int, clip: float, complement: bool) -> tuple[mpf, mpf]:
    """Sum of w * f over the new nodes of ``level`` (t = 0 included at level 0).

    Returns (sum, magnitude of the outermost contribution).
    """
    acc = mpf(0)
    if level == 0:
        half = mpf(0.5)
        acc += (mp.pi / 4) * (f(half, half) if complement else f(half))
    edge = mpf(0)
    for small, big, w in _nodes(level, clip):
        if complement:
            v = f(small, big) + f(big, small)
        else:
            v = f(small) + f(big)
        acc += w * v
        edge = abs(w * v)
    return acc, edge


def integrate_01(f: Callable, cfg: QuadratureConfig | None = None, *,
                 complement: bool = False) -> EvalResult:
    """Integrate ``f`` over (0, 1) by tanh-sinh quadrature.

    With ``complement=True`` the integrand is called as ``f(q, 1 - q)`` with
    the complement computed without cancellation.  The returned error is the
    difference between the last two levels plus an estimate of the clipped
    tails; it is heuristic, not a bound.
    """
    cfg = cfg or DEFAULT_CONFIG
    tol = mpf(cfg.target_tol)
    total, edge = _level_sum(f, 0, cfg.endpoint_clip, complement)
    prev = total
    diff = mpf("inf")
    for level in range(1, cfg.max_levels + 1):
        s, e = _level_sum(f, level, cfg.endpoint_clip, complement)
        total += s
        edge = e
        est = total * mpf(2) ** (-level)
        diff = abs(est - prev)
        prev = est
        if level >= cfg.min_levels and diff <= tol:
            err = diff + edge * mpf(2) ** (-level) + eps() * abs(est) * 10
            return EvalResult(est, err, Method.QUADRATURE, heuristic=True)
    raise QuadratureError(
        f"tanh-sinh did not converge in {cfg.max_levels} levels "
        f"(last level difference {mpmath.nstr(diff, 3)})",
        prev, cfg.max_levels, diff)


# -------------------------------------------------------------------------
# Integrand building blocks
# -------------------------------------------------------------------------

def zeta_bar(x, q) -> mpf:
    """zeta(1 - x, q); for positive integer x this is -B_x(q)/x."""
    x = to_mpf(x)
    if x == 0:
        raise PoleError("zeta_bar(0, q) sits on the pole of zeta(z, q)")
    if x >= 1 and x == int(x):
        n = int(x)
        return -bernoulli_poly(n, q) / n
    return zeta_raw(1 - x, q)


def zeta_bar_plus(x, q, qc=None) -> mpf:
    """zeta_bar(x, q) + zeta_bar(x, 1 - q)."""
    qc = 1 - to_mpf(q) if qc is None else qc
    return zeta_bar(x, q) + zeta_bar(x, qc)


def _log_sin_pi(q: mpf, qc: mpf) -> mpf:
    return mpmath.log(mpmath.sin(mp.pi * min(q, qc)))


# -------------------------------------------------------------------------
# Catalog
# -------------------------------------------------------------------------

class IntegralFamily(str, enum.Enum):
    I = "I"
    J = "J"
    N = "N"
    M = "M"
    MSTAR = "Mstar"
    K = "K"
    KSTAR = "Kstar"
    Z = "Z"
    ZSTAR = "Zstar"
    U = "U"
    TWO_ZETA_SAME = "TwoZetaSame"
    TWO_ZETA_REFLECTED = "TwoZetaReflected"


_ARITY = {IntegralFamily.I: 3, IntegralFamily.J: 3}


@dataclass(frozen=True)
class IntegralId:
    """One member of the integral catalog with its indices."""

    family: IntegralFamily
    indices: tuple

    def __post_init__(self) -> None:
        fam = IntegralFamily(self.family)
        object.__setattr__(self, "family", fam)
        want = _ARITY.get(fam, 2)
        if len(self.indices) != want:
            raise ValueError(f"{fam.value} takes {want} indices, got {len(self.indices)}")
        if fam not in (IntegralFamily.I, IntegralFamily.J, IntegralFamily.TWO_ZETA_SAME,
                       IntegralFamily.TWO_ZETA_REFLECTED):
            if any(int(i) != i or i < 1 for i in self.indices):
                raise ValueError(f"{fam.value} needs positive integer indices")

    def quadrature(self, cfg: QuadratureConfig | None = None) -> EvalResult:
        fn = _QUAD[self.family]
        return fn(*self.indices, cfg=cfg)

    def closed_form(self) -> EvalResult:
        fn = _CLOSED.get(self.family)
        if fn is None:
            raise NotImplementedError(f"no closed form for {self.family.value}")
        return fn(*self.indices)


def _check_ijk(a, b, c) -> None:
    for x in (a, b, c):
        if to_mpf(x) == 0:
            raise PoleError("I/J parameters must be nonzero")


def integral_I(a, b, c, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 zeta(1-a,q) zeta(1-b,q) zeta(1-c,q) dq."""
    _check_ijk(a, b, c)
    return integrate_01(lambda q: zeta_bar(a, q) * zeta_bar(b, q) * zeta_bar(c, q), cfg)


def integral_J(a, b, c, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 zeta(1-a,q) zeta(1-b,q) zeta(1-c,1-q) dq."""
    _check_ijk(a, b, c)
    return integrate_01(lambda q, qc: zeta_bar(a, q) * zeta_bar(b, q) * zeta_bar(c, qc),
                        cfg, complement=True)


def integral_N_quad(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    return integrate_01(lambda q: negapolygamma_raw(m, q) * bernoulli_poly(n, q), cfg)


def integral_M_quad(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    return integrate_01(lambda q: negapolygamma_raw(m, q) * negapolygamma_raw(n, q), cfg)


def integral_Mstar_quad(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    return integrate_01(lambda q, qc: negapolygamma_raw(m, q) * negapolygamma_raw(n, qc),
                        cfg, complement=True)


def integral_K(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 psi^{(-m)}(q) B_n(q) ln Gamma(q) dq (quadrature only)."""
    return integrate_01(
        lambda q: negapolygamma_raw(m, q) * bernoulli_poly(n, q) * log_gamma_raw(q), cfg)


def integral_Kstar(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 psi^{(-m)}(1-q) B_n(q) ln Gamma(q) dq (quadrature only)."""
    return integrate_01(
        lambda q, qc: negapolygamma_raw(m, qc) * bernoulli_poly(n, q) * log_gamma_raw(q),
        cfg, complement=True)


def integral_Z(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 psi^{(-m)}(q) psi^{(-n)}(q) ln Gamma(q) dq (quadrature only)."""
    return integrate_01(
        lambda q: negapolygamma_raw(m, q) * negapolygamma_raw(n, q) * log_gamma_raw(q), cfg)


def integral_Zstar(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 psi^{(-m)}(q) psi^{(-n)}(1-q) ln Gamma(q) dq (quadrature only)."""
    return integrate_01(
        lambda q, qc: negapolygamma_raw(m, q) * negapolygamma_raw(n, qc) * log_gamma_raw(q),
        cfg, complement=True)


def integral_U(m: int, n: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """int_0^1 psi^{(-m)}(q) B_n(q) ln sin(pi q) dq (quadrature only)."""
    return integrate_01(
        lambda q, qc: negapolygamma_raw(m, q) * bernoulli_poly(n, q) * _log_sin_pi(q, qc),
        cfg, complement=True)


# closed forms ------------------------------------------------------------

def _zeta_block(s: int) -> tuple[Real, Real, Real]:
    return riemann_zeta(s), riemann_zeta_deriv(s, 1), riemann_zeta_deriv(s, 2)


def _trig_half_pi(k: int) -> tuple[int, int]:
    """(cos(pi k / 2), sin(pi k / 2)) exactly for integer k."""
    return ((1, 0), (0, 1), (-1, 0), (0, -1))[k % 4]


def integral_N(m: int, n: int) -> EvalResult:
    """Closed form of int_0^1 psi^{(-m)}(q) B_n(q) dq."""
    if m < 1 or n < 1:
        raise DomainError(f"N needs positive indices, got ({m}, {n})")
    s = m + n
    z, zp, _ = _zeta_block(s)
    cos_, sin_ = _trig_half_pi(n - m)
    pref = 2 * math.factorial(n) / (2 * mp.pi) ** s
    val = pref * (mp.pi / 2 * z * sin_ - (const_A() * z - zp) * cos_)
    return EvalResult.of(val, Method.CLOSED_FORM)


def integral_M(k: int, kp: int) -> EvalResult:
    """Closed form of int_0^1 psi^{(-k)}(q) psi^{(-k')}(q) dq."""
    if k < 1 or kp < 1:
        raise DomainError(f"M needs positive indices, got ({k}, {kp})")
    s = k + kp
    z, zp, zpp = _zeta_block(s)
    cos_minus, _ = _trig_half_pi(k - kp)
    if cos_minus == 0:
        return EvalResult(mpf(0), mpf(0), Method.CLOSED_FORM)
    a = const_A()
    val = 2 / (2 * mp.pi) ** s * cos_minus * (const_A_plus() * z - 2 * a * zp + zpp)
    return EvalResult.of(val, Method.CLOSED_FORM)


def integral_Mstar(k: int, kp: int) -> EvalResult:
    """Closed form of int_0^1 psi^{(-k)}(q) psi^{(-k')}(1-q) dq."""
    if k < 1 or kp < 1:
        raise DomainError(f"M* needs positive indices, got ({k}, {kp})")
    s = k + kp
    z, zp, zpp = _zeta_block(s)
    cos_plus, sin_plus = _trig_half_pi(s)
    a = const_A()
    val = 2 / (2 * mp.pi) ** s * (
        cos_plus * (const_A_minus() * z - 2 * a * zp + zpp)
        + mp.pi * sin_plus * (a * z - zp))
    return EvalResult.of(val, Method.CLOSED_FORM)


def two_zeta_integral(a, b, reflected: bool = False) -> EvalResult:
    """Closed form of int_0^1 zeta_bar(a,q) zeta_bar(b, q or 1-q) dq for a, b > 1."""
    a, b = to_mpf(a), to_mpf(b)
    if a <= 1 or b <= 1:
        raise DomainError(f"two-zeta integral needs a, b > 1, got ({a}, {b})")
    lg = log_gamma(a) + log_gamma(b)
    gam = Real(mpmath.exp(lg.value), 2 * lg.err * mpmath.exp(lg.value))
    phase = mpmath.cos(mp.pi * ((a + b) if reflected else (a - b)) / 2)
    val = 2 * gam / (2 * mp.pi) ** (a + b) * riemann_zeta(a + b) * phase
    return EvalResult.of(val, Method.CLOSED_FORM)


def two_zeta_integral_quad(a, b, reflected: bool = False,
                           cfg: QuadratureConfig | None = None) -> EvalResult:
    if reflected:
        return integrate_01(lambda q, qc: zeta_bar(a, q) * zeta_bar(b, qc), cfg,
                            complement=True)
    return integrate_01(lambda q: zeta_bar(a, q) * zeta_bar(b, q), cfg)


_QUAD = {
    IntegralFamily.I: integral_I,
    IntegralFamily.J: integral_J,
    IntegralFamily.N: integral_N_quad,
    IntegralFamily.M: integral_M_quad,
    IntegralFamily.MSTAR: integral_Mstar_quad,
    IntegralFamily.K: integral_K,
    IntegralFamily.KSTAR: integral_Kstar,
    IntegralFamily.Z: integral_Z,
    IntegralFamily.ZSTAR: integral_Zstar,
    IntegralFamily.U: integral_U,
    IntegralFamily.TWO_ZETA_SAME: lambda a, b, cfg=None: two_zeta_integral_quad(a, b, False, cfg),
    IntegralFamily.TWO_ZETA_REFLECTED: lambda a, b, cfg=None: two_zeta_integral_quad(a, b, True, cfg),
}

_CLOSED = {
    IntegralFamily.N: integral_N,
    IntegralFamily.M: integral_M,
    IntegralFamily.MSTAR: integral_Mstar,
    IntegralFamily.TWO_ZETA_SAME: lambda a, b: two_zeta_integral(a, b, False),
    IntegralFamily.TWO_ZETA_REFLECTED: lambda a, b: two_zeta_integral(a, b, True),
}


# -------------------------------------------------------------------------
# ln Gamma moments
# -------------------------------------------------------------------------

@dataclass(frozen=True)
class MomentReport:
    L1_quad: EvalResult
    L1_closed: Real
    L2_quad: EvalResult
    L2_closed: Real
    L3_quad: EvalResult

    @property
    def L1_residual(self) -> mpf:
        return abs(self.L1_quad.value - self.L1_closed.value)

    @property
    def L2_residual(self) -> mpf:
        return abs(self.L2_quad.value - self.L2_closed.value)


def loggamma_moments_check(cfg: QuadratureConfig | None = None) -> MomentReport:
    """Quadrature of int ln^k Gamma for k = 1, 2, 3 against the known closed forms.

    The cube moment is reported numerically only.
    """
    l1q = integrate_01(log_gamma_raw, cfg)
    l2q = integrate_01(lambda q: log_gamma_raw(q) ** 2, cfg)
    l3q = integrate_01(lambda q: log_gamma_raw(q) ** 3, cfg)
    l1 = log_2pi() / 2
    g = euler_gamma()
    a = const_A()
    zp2 = riemann_zeta_deriv(2, 1)
    zpp2 = riemann_zeta_deriv(2, 2)
    l2 = (g ** 2 / 12 + mp.pi ** 2 / 48 + g * l1 / 3 + mpf(4) / 3 * l1 ** 2
          - a * zp2 / mp.pi ** 2 + zpp2 / (2 * mp.pi ** 2))
    return MomentReport(l1q, Real.exact(l1), l2q, l2, l3q)
