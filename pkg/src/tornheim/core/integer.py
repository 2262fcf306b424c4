"""T(n1, n2, n3) at positive integers from the R-integrals.

    T(n1, n2, n3) = p(alpha) (2 pi)^alpha / (2 n1! n2! n3!) T_R(n1, n2, n3),
    alpha = n1 + n2 + n3,

with T_R a parity-dependent combination of R_1..R_6 (see ``_CASES``).
Orderings with n1 odd and n2 even are first swapped to even/odd.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
from mpmath import mp, mpf

from tornheim.core.direct import tornheim_direct
from tornheim.core.params import ParamTriple, p_sign
from tornheim.core.qr import r_integral
from tornheim.numeric import EvalResult, Method, Real
from tornheim.quadrature import (
    QuadratureConfig,
    integral_K,
    integral_Kstar,
    integral_N,
    integral_U,
    integral_Z,
    integral_Zstar,
    integrate_01,
)
from tornheim.specfun import (
    DomainError,
    bernoulli_poly,
    digamma_raw,
    euler_gamma,
    log_2pi,
    riemann_zeta,
    riemann_zeta_deriv,
)
from tornheim.polygamma_neg import negapolygamma_raw

__all__ = [
    "parity_case",
    "t_r",
    "tornheim_integer",
    "IdentityCheck",
    "weight_table_check",
    "k_reduction_check",
]

# (coefficient, R index, permutation of (n1, n2, n3)) per parity case
_CASES: dict[int, list[tuple[mpf | int, int, tuple[int, int, int]]]] = {
    1: [(-0.5, 1, (0, 1, 2)), (1, 3, (0, 1, 2)), (-1, 4, (0, 1, 2))],
    2: [(-1, 2, (0, 1, 2)), (1, 5, (0, 1, 2)), (1, 6, (0, 1, 2)),
        (-1, 6, (2, 0, 1)), (-1, 6, (2, 1, 0))],
    3: [(-1, 2, (2, 0, 1)), (-1, 2, (2, 1, 0))],
    4: [(1, 3, (2, 0, 1)), (1, 3, (2, 1, 0)), (1, 4, (0, 2, 1)), (1, 4, (1, 2, 0))],
    5: [(-0.5, 1, (0, 1, 2)), (1, 3, (0, 1, 2)), (1, 4, (0, 1, 2))],
    6: [(-1, 2, (0, 1, 2)), (1, 5, (0, 1, 2)), (1, 6, (0, 1, 2)),
        (1, 6, (2, 0, 1)), (1, 6, (2, 1, 0))],
}

_PARITY_TO_CASE = {
    (0, 0, 0): 1,
    (0, 0, 1): 2,
    (0, 1, 0): 3,
    (0, 1, 1): 4,
    (1, 1, 0): 5,
    (1, 1, 1): 6,
}


def _orient(n1: int, n2: int, n3: int) -> tuple[int, int, int]:
    """Swap the first two arguments into the orientation the cases expect.

    Mixed parity puts the even one first; equal parity puts the smaller first,
    so that (n1, n2, n3) and (n2, n1, n3) share one computation.
    """
    if n1 % 2 != n2 % 2:
        return (n1, n2, n3) if n1 % 2 == 0 else (n2, n1, n3)
    return (min(n1, n2), max(n1, n2), n3)


def parity_case(n1: int, n2: int, n3: int) -> int:
    """Case number 1..6 after orientation."""
    a, b, c = _orient(n1, n2, n3)
    return _PARITY_TO_CASE[(a % 2, b % 2, c % 2)]


def t_r(n1: int, n2: int, n3: int, cfg: QuadratureConfig | None = None) -> Real:
    """T_R(n1, n2, n3) for an already oriented triple."""
    case = _PARITY_TO_CASE[(n1 % 2, n2 % 2, n3 % 2)]
    ns = (n1, n2, n3)
    total = Real.exact(0)
    for coef, j, perm in _CASES[case]:
        args = tuple(ns[i] for i in perm)
        total = total + r_integral(j, *args, cfg=cfg) * coef
    return total


def tornheim_integer(n1: int, n2: int, n3: int, cfg: QuadratureConfig | None = None) -> EvalResult:
    """T(n1, n2, n3) for positive integers through the parity-case assembly."""
    if min(n1, n2, n3) < 1 or any(int(x) != x for x in (n1, n2, n3)):
        raise DomainError(f"indices must be positive integers, got ({n1}, {n2}, {n3})")
    n1, n2, n3 = int(n1), int(n2), int(n3)
    ParamTriple(n1, n2, n3).require_convergent()
    a, b, c = _orient(n1, n2, n3)
    alpha = a + b + c
    pref = (p_sign(alpha) * (2 * mp.pi) ** alpha
            / (2 * math.factorial(a) * math.factorial(b) * math.factorial(c)))
    value = t_r(a, b, c, cfg) * pref
    # Case 3 uses R2 only, which is closed form
    heuristic = parity_case(a, b, c) != 3
    return EvalResult.of(value, Method.PARITY_ASSEMBLY, heuristic=heuristic)


# -------------------------------------------------------------------------
# Small-weight identities in terms of K, K*, Z, Z*, U
# -------------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityCheck:
    label: str
    lhs: mpf
    rhs: mpf
    err: mpf

    @property
    def residual(self) -> mpf:
        return abs(self.lhs - self.rhs)


def weight_table_check(cfg: QuadratureConfig | None = None) -> list[IdentityCheck]:
    """Each small-weight identity, with T by direct summation on the left.

    The right-hand sides combine quadrature values of K, K*, Z, Z*, U with
    zeta values and A = gamma + ln 2 pi.
    """
    pi = mp.pi
    l2p = log_2pi()
    a = euler_gamma() + l2p

    def z(s, k=0):
        return riemann_zeta(s) if k == 0 else riemann_zeta_deriv(s, k)

    Ks = lambda m, n: integral_Kstar(m, n, cfg)  # noqa: E731
    Z = lambda m, n: integral_Z(m, n, cfg)  # noqa: E731
    Zs = lambda m, n: integral_Zstar(m, n, cfg)  # noqa: E731
    U = lambda m, n: integral_U(m, n, cfg)  # noqa: E731

    w5 = l2p * (pi ** 2 * a ** 2 / 45 - pi ** 2 * a / 30 - pi ** 4 / 90
                - z(4, 1) * 4 * a / pi ** 2 + z(4, 1) * 3 / pi ** 2 + z(4, 2) * 2 / pi ** 2)
    rhs = {
        (1, 1, 1): Z(1, 1) * 4 + Zs(1, 1) * 12 - z(3)
        + l2p * (a ** 2 / 3 - pi ** 2 / 6 - z(2, 1) * 4 * a / pi ** 2 + z(2, 2) * 2 / pi ** 2),
        (1, 1, 2): U(1, 2) * (-4 * pi ** 2) - pi ** 4 / 90 - z(3) * mpmath.log(2),
        (1, 2, 1): (U(1, 2) + U(2, 1) * 2) * (-4 * pi ** 2),
        (1, 1, 3): (Ks(1, 3) + Z(1, 3) * 2 + Zs(1, 3) * 2 + Zs(3, 1) * 4) * (-8 * pi ** 2)
        - z(5) + w5,
        (1, 2, 2): z(3) * (pi ** 2 / 6) - z(5) * 1.5,
        (1, 3, 1): (Ks(1, 3) + Z(3, 1) * 2 + Zs(1, 3) * 2 + Zs(3, 1) * 4) * (-8 * pi ** 2)
        + z(3) * (pi ** 2 / 6) - z(5) * 2 + w5,
        (2, 2, 1): Z(2, 2) * (32 * pi ** 2) + z(3) * (pi ** 2 / 3) - z(5) * 3
        + l2p * (-pi ** 2 * a ** 2 / 45 - pi ** 4 / 180 + z(4, 1) * 4 * a / pi ** 2
                 - z(4, 2) * 2 / pi ** 2),
    }
    out = []
    for t, r in rhs.items():
        lhs = tornheim_direct(*t)
        out.append(IdentityCheck(f"T{t[0]}{t[1]}{t[2]}", lhs.value, r.value, lhs.err + r.err))
    return out


def k_reduction_check(m: int, n: int, cfg: QuadratureConfig | None = None) -> IdentityCheck:
    """Integration by parts in the index of the negapolygamma of K, for odd m >= 3.

    With K_{n,m} = <psi^{(-n)} B_m ln Gamma> and N_{n,m} = <psi^{(-n)} B_m>:

        K_{n,m} = -m K_{n+1,m-1} + ln sqrt(2 pi) (N_{n,m} + m N_{n+1,m-1})
                  - <B_m psi psi^{(-n-1)}>.

    The boundary term vanishes because B_m(0) = B_m(1) = 0 for odd m >= 3.
    """
    if m < 3 or m % 2 == 0 or n < 1:
        raise DomainError(f"need odd m >= 3 and n >= 1, got (m, n) = ({m}, {n})")
    lhs = integral_K(n, m, cfg)
    moment = integrate_01(
        lambda q: bernoulli_poly(m, q) * digamma_raw(q) * negapolygamma_raw(n + 1, q), cfg)
    half_l2p = log_2pi() / 2
    rhs = (-m * integral_K(n + 1, m - 1, cfg)
           + half_l2p * (integral_N(n, m) + m * integral_N(n + 1, m - 1)) - moment)
    return IdentityCheck(f"k-reduction-{m}-{n}", lhs.value, rhs.value, lhs.err + rhs.err)
