"""T(a, b, c) through integrals of products of Hurwitz zeta functions.

With zb(z, q) = zeta(1 - z, q), the Fourier series of zb turns the double
series into integrals over (0, 1):

    I(a, b, c) = <zb(a, q) zb(b, q) zb(c, q)>,
    J(a, b, c) = <zb(a, q) zb(b, q) zb(c, 1 - q)>.

This module holds the Fourier identities themselves, the two symmetric
relations between T and I, J, the explicit formula for non-integer
parameters, and its limit when the first two parameters are integers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np
from mpmath import mp, mpf

from tornheim.core.direct import tornheim_direct
from tornheim.core.params import ParamTriple, as_int
from tornheim.numeric import EvalResult, Method, to_mpf
from tornheim.polygamma_neg import bernoulli_A_raw
from tornheim.quadrature import (
    QuadratureConfig,
    integral_I,
    integral_J,
    integrate_01,
    zeta_bar,
    zeta_bar_plus,
)
from tornheim.specfun import DomainError, PoleError, bernoulli_poly

__all__ = [
    "NEAR_INTEGER_GUARD",
    "TrigWeights",
    "FourierResiduals",
    "fourier_identity_check",
    "Prop31Residuals",
    "prop31_check",
    "tornheim_analytic",
    "analytic_limit",
    "tornheim_two_int",
    "zbar_plus_even_residual",
    "zbar_plus_odd_limit",
]

NEAR_INTEGER_GUARD = 1e-3


def _is_pos_int(x: mpf) -> bool:
    return x >= 1 and x == int(x)


@dataclass(frozen=True)
class TrigWeights:
    """f_c(z) = 2 Gamma(z) (2 pi)^{-z} cos(pi z / 2), f_s likewise with sin, and

    lambda(z) = Gamma(1 - z) / (2 pi)^{1 - z}  (None at positive integers).
    """

    z: mpf
    f_c: mpf
    f_s: mpf
    lam: mpf | None

    @classmethod
    def at(cls, z) -> "TrigWeights":
        z = to_mpf(z)
        if z <= 0 and z == int(z):
            raise PoleError(f"Gamma has a pole at z = {z}")
        g = 2 * mpmath.gamma(z) / (2 * mp.pi) ** z
        lam = None if _is_pos_int(z) else mpmath.gamma(1 - z) / (2 * mp.pi) ** (1 - z)
        return cls(z, g * mpmath.cospi(z / 2), g * mpmath.sinpi(z / 2), lam)

    def norm_residual(self) -> mpf:
        """|f_c^2 + f_s^2 - (2 Gamma(z) / (2 pi)^z)^2|."""
        g = 2 * mpmath.gamma(self.z) / (2 * mp.pi) ** self.z
        return abs(self.f_c ** 2 + self.f_s ** 2 - g * g)


# -------------------------------------------------------------------------
# Fourier identities
# -------------------------------------------------------------------------

@dataclass(frozen=True)
class FourierResiduals:
    cos_residual: float
    sin_residual: float
    terms: int
    tail_bound: float


def fourier_identity_check(z, q, tol: float = 1e-12, max_terms: int = 5_000_000) -> FourierResiduals:
    """Residuals of

        2 f_c(z) sum cos(2 pi q n) / n^z = zb(z, q) + zb(z, 1 - q),
        2 f_s(z) sum sin(2 pi q n) / n^z = zb(z, q) - zb(z, 1 - q).

    The trigonometric sums are truncated at N terms, where the summation-by-parts
    bound (N+1)^{-z} / |sin(pi q)| on the tail is below ``tol``; they are
    summed in double precision.
    """
    z, q = to_mpf(z), to_mpf(q)
    if z <= 1:
        raise DomainError(f"trigonometric series need z > 1 to converge absolutely, got z = {z}")
    if not 0 < q < 1:
        raise DomainError(f"q must lie in (0, 1), got {q}")
    zf, qf = float(z), float(q)
    sin_pq = abs(math.sin(math.pi * qf))
    n_terms = int(math.ceil((1.0 / (tol * sin_pq)) ** (1.0 / zf)))
    if n_terms > max_terms:
        raise DomainError(f"tail bound needs {n_terms} terms, above the budget {max_terms}")
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    w = n ** -zf
    # reduce the phase exactly before scaling by 2 pi
    phase = 2 * np.pi * np.mod(n * qf, 1.0)
    s_cos = math.fsum((np.cos(phase) * w).tolist())
    s_sin = math.fsum((np.sin(phase) * w).tolist())
    tail = (n_terms + 1) ** -zf / sin_pq
    tw = TrigWeights.at(z)
    plus = zeta_bar(z, q) + zeta_bar(z, 1 - q)
    minus = zeta_bar(z, q) - zeta_bar(z, 1 - q)
    return FourierResiduals(
        cos_residual=abs(2 * float(tw.f_c) * s_cos - float(plus)),
        sin_residual=abs(2 * float(tw.f_s) * s_sin - float(minus)),
        terms=n_terms,
        tail_bound=tail,
    )


# -------------------------------------------------------------------------
# Symmetric relations
# -------------------------------------------------------------------------

@dataclass(frozen=True)
class Prop31Residuals:
    """Both sides of the two symmetric relations.

    sym:  f_c(a) f_c(b) f_c(c) T^sym  =  I(a,b,c) + J^sym(a,b,c)
    nsym: f_s(a) f_s(b) f_c(c) T^nsym =  I(a,b,c) - J^nsym(a,b,c)

    where h^sym(a,b,c) = h(a,b,c) + h(b,c,a) + h(c,a,b) and
    h^nsym(a,b,c) = -h(a,b,c) + h(b,c,a) + h(c,a,b).
    """

    sym_lhs: mpf
    sym_rhs: mpf
    nsym_lhs: mpf
    nsym_rhs: mpf
    err: mpf

    @property
    def sym_residual(self) -> mpf:
        return abs(self.sym_lhs - self.sym_rhs)

    @property
    def nsym_residual(self) -> mpf:
        return abs(self.nsym_lhs - self.nsym_rhs)


def prop31_check(a, b, c, cfg: QuadratureConfig | None = None) -> Prop31Residuals:
    """Evaluate both symmetric relations with T by direct summation and I, J by quadrature."""
    a, b, c = to_mpf(a), to_mpf(b), to_mpf(c)
    for x, y, w in ((a, b, c), (b, c, a), (c, a, b)):
        ParamTriple(x, y, w).require_convergent()
    T = {t: tornheim_direct(*t) for t in ((a, b, c), (b, c, a), (c, a, b))}
    Js = [integral_J(*t, cfg=cfg) for t in ((a, b, c), (b, c, a), (c, a, b))]
    I = integral_I(a, b, c, cfg=cfg)
    wa, wb, wc = TrigWeights.at(a), TrigWeights.at(b), TrigWeights.at(c)
    t_abc, t_bca, t_cab = T[(a, b, c)], T[(b, c, a)], T[(c, a, b)]
    t_sym = t_abc + t_bca + t_cab
    t_nsym = -t_abc + t_bca + t_cab
    cc = wa.f_c * wb.f_c * wc.f_c
    ss = wa.f_s * wb.f_s * wc.f_c
    sym_rhs = I + Js[0] + Js[1] + Js[2]
    nsym_rhs = I - (-Js[0] + Js[1] + Js[2])
    err = (abs(cc) * t_sym.err + abs(ss) * t_nsym.err + sym_rhs.err + nsym_rhs.err)
    return Prop31Residuals(cc * t_sym.value, sym_rhs.value, ss * t_nsym.value, nsym_rhs.value, err)


# -------------------------------------------------------------------------
# Non-integer parameters
# -------------------------------------------------------------------------

def _check_non_integer(*xs: mpf) -> None:
    guard = mpf(NEAR_INTEGER_GUARD) * (1 - mpf(10) ** -9)
    for x in xs:
        d = abs(x - mpmath.nint(x))
        if x > 0 and d < guard:
            raise DomainError(
                f"parameter {mpmath.nstr(x, 12)} lies within {NEAR_INTEGER_GUARD} of an integer; "
                "the explicit formula needs non-integer parameters")


def tornheim_analytic(a, b, c, cfg: QuadratureConfig | None = None) -> EvalResult:
    """T(a, b, c) for non-integer a, b, c from

    T = 4 l(a) l(b) l(c) sin(pi c/2) [cos(pi (a-b)/2) (J(c,a,b) + J(c,b,a))
                                      - cos(pi (a+b)/2) (I(a,b,c) + J(a,b,c))],

    l(z) = Gamma(1-z) / (2 pi)^{1-z}.  The first two parameters are put in a
    fixed order first, so swapping them gives the same number.
    """
    a, b, c = to_mpf(a), to_mpf(b), to_mpf(c)
    _check_non_integer(a, b, c)
    ParamTriple(a, b, c).require_convergent()
    if a > b:
        a, b = b, a
    la, lb, lc = (TrigWeights.at(x).lam for x in (a, b, c))
    j_cab = integral_J(c, a, b, cfg)
    j_cba = integral_J(c, b, a, cfg)
    i_abc = integral_I(a, b, c, cfg)
    j_abc = integral_J(a, b, c, cfg)
    pref = 4 * la * lb * lc * mpmath.sinpi(c / 2)
    inner = (mpmath.cospi((a - b) / 2) * (j_cab + j_cba)
             - mpmath.cospi((a + b) / 2) * (i_abc + j_abc))
    return EvalResult.of(pref * inner, Method.ANALYTIC_IJ, heuristic=True)


def analytic_limit(n1: int, n2: int, n3: int, epsilons=(1e-2, 1e-3),
                   cfg: QuadratureConfig | None = None) -> EvalResult:
    """Limit of the explicit formula at (n1+e, n2+e, n3+e) as e -> 0.

    Each epsilon contributes the mean of the points at +e and -e, which is
    even in e; the means are Richardson-extrapolated in e^2.
    """
    e1, e2 = (to_mpf(e) for e in epsilons)
    ns = (n1, n2, n3)

    def mean(e: mpf) -> EvalResult:
        up = tornheim_analytic(*(n + e for n in ns), cfg=cfg)
        dn = tornheim_analytic(*(n - e for n in ns), cfg=cfg)
        return (up + dn) / 2

    m1, m2 = mean(e1), mean(e2)
    w = e1 ** 2 / (e1 ** 2 - e2 ** 2)
    extrap = w * m2 - (w - 1) * m1
    err = extrap.err + abs(m2.value - m1.value) * e2 ** 2 / (e1 ** 2 - e2 ** 2)
    return EvalResult(extrap.value, err, Method.ANALYTIC_IJ, heuristic=True)


# -------------------------------------------------------------------------
# Two integer parameters
# -------------------------------------------------------------------------

def tornheim_two_int(n1: int, n2: int, c, cfg: QuadratureConfig | None = None) -> EvalResult:
    """T(n1, n2, c) for positive integers n1, n2 and non-integer c.

    With P = (2 pi)^{n1+n2+c} / (4 n1! n2! Gamma(c) cos(pi c/2)) and zp(c, q) = zb(c, q) + zb(c, 1-q):

    n1, n2 even:  (-1)^{(n1+n2)/2} P [<B B zb> - <A A zp>/pi^2 + <A A(1-q) zp>/pi^2]
    n1 even, n2 odd: (-1)^{(n1+n2+1)/2} P [<B A zp> + <A B zp>]/pi
    n1, n2 odd:   (-1)^{(n1+n2)/2} P [<B B zb> - <A A zp>/pi^2 - <A A(1-q) zp>/pi^2]

    with A = A_{n1}, A_{n2} and B = B_{n1}, B_{n2} in that order.  The odd/even
    ordering is handled by swapping the first two arguments.
    """
    i1, i2 = as_int(n1), as_int(n2)
    if i1 is None or i2 is None or i1 < 1 or i2 < 1:
        raise DomainError(f"n1, n2 must be positive integers, got ({n1}, {n2})")
    c = to_mpf(c)
    if c == int(c) and c >= 1:
        raise DomainError(f"c must not be a positive integer, got {c}")
    ParamTriple(i1, i2, c).require_convergent()
    if i1 % 2 == 1 and i2 % 2 == 0:
        i1, i2 = i2, i1
    pi = mp.pi
    pref = ((2 * pi) ** (i1 + i2 + c)
            / (4 * math.factorial(i1) * math.factorial(i2) * mpmath.gamma(c) * mpmath.cospi(c / 2)))

    def quad(f) -> EvalResult:
        return integrate_01(f, cfg, complement=True)

    def zp(q, qc):
        return zeta_bar_plus(c, q, qc)

    A, B = bernoulli_A_raw, bernoulli_poly
    if i1 % 2 == 0 and i2 % 2 == 1:
        sign = (-1) ** ((i1 + i2 + 1) // 2)
        br = quad(lambda q, qc: (B(i1, q) * A(i2, q) + A(i1, q) * B(i2, q)) * zp(q, qc)) / pi
    else:
        sign = (-1) ** ((i1 + i2) // 2)
        s = 1 if i1 % 2 == 0 else -1
        bb = quad(lambda q, qc: B(i1, q) * B(i2, q) * zeta_bar(c, q))
        aa = quad(lambda q, qc: A(i1, q) * A(i2, q) * zp(q, qc))
        ar = quad(lambda q, qc: A(i1, q) * A(i2, qc) * zp(q, qc))
        br = bb - aa / pi ** 2 + s * ar / pi ** 2
    return EvalResult.of(sign * pref * br, Method.TWO_INTEGER_LIMIT, heuristic=True)


# -------------------------------------------------------------------------
# Limits of zp(c, q) / cos(pi c / 2)
# -------------------------------------------------------------------------

def zbar_plus_even_residual(n: int, q) -> mpf:
    """|zp(n, q)/cos(pi n/2) + (2/n)(-1)^{n/2} B_n(q)| for even n."""
    if n < 2 or n % 2:
        raise DomainError(f"n must be a positive even integer, got {n}")
    lhs = zeta_bar_plus(n, q) / mpmath.cospi(mpf(n) / 2)
    rhs = -mpf(2) / n * (-1) ** (n // 2) * bernoulli_poly(n, to_mpf(q))
    return abs(lhs - rhs)


def zbar_plus_odd_limit(n: int, q, epsilons=(1e-2, 1e-3)) -> tuple[mpf, mpf]:
    """(extrapolated limit of zp(c, q)/cos(pi c/2) as c -> n, closed form) for odd n.

    The closed form is -(2/n)(-1)^{(n+1)/2} (A_n(q) + A_n(1-q)) / pi.  Each
    epsilon uses the mean of c = n + e and c = n - e; the means are
    Richardson-extrapolated in e^2.
    """
    if n < 1 or n % 2 == 0:
        raise DomainError(f"n must be a positive odd integer, got {n}")
    q = to_mpf(q)
    with mp.workdps(mp.dps + 10):
        def ratio(cv: mpf) -> mpf:
            return zeta_bar_plus(cv, q) / mpmath.cospi(cv / 2)

        def mean(e: mpf) -> mpf:
            return (ratio(n + e) + ratio(n - e)) / 2

        e1, e2 = (to_mpf(e) for e in epsilons)
        m1, m2 = mean(e1), mean(e2)
        w = e1 ** 2 / (e1 ** 2 - e2 ** 2)
        limit = w * m2 - (w - 1) * m1
        closed = (-mpf(2) / n * (-1) ** ((n + 1) // 2)
                  * (bernoulli_A_raw(n, q) + bernoulli_A_raw(n, 1 - q)) / mp.pi)
    return +limit, +closed
