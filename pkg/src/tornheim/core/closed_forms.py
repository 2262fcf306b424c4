"""Classical closed forms for T(a, b, c) at integer arguments.

Huard's reduction to T(i, 0, N - i) at odd weight, Tornheim's evaluations of
T(1, 1, a-2), T(a-2, 1, 1), T(1, 0, a-1), and the symmetric sums
T(2n, 2n, 2n), T(2n+1, 2n+1, 2n+1).
"""

from __future__ import annotations

import enum
import math
from collections import defaultdict
from fractions import Fraction

import mpmath
from mpmath import mpf

from tornheim.bernoulli_algebra import integral_BBB
from tornheim.core.params import ParamTriple, UnsupportedError, as_int
from tornheim.numeric import EvalResult, Method, Real, eps, to_mpf
from tornheim.specfun import DomainError, bernoulli_number, riemann_zeta

__all__ = [
    "tornheim_reduce",
    "tornheim_T_i0",
    "tornheim_huard",
    "Classic",
    "tornheim_classics",
    "symmetric_even_zeta",
    "symmetric_even_bernoulli",
    "symmetric_even_integral",
    "symmetric_even_rational",
    "classic_relation_residual",
    "symmetric_odd",
    "tornheim_symmetric",
    "zeta_int",
]

Triple = tuple[int, int, int]


def zeta_int(s: int) -> Real:
    """zeta(s) at an integer s >= 0 (zeta(0) = -1/2), s != 1."""
    if s == 0:
        return Real.exact(Fraction(-1, 2))
    if s == 1:
        raise DomainError("zeta has a pole at s = 1")
    if s < 0:
        raise DomainError(f"zeta_int needs s >= 0, got {s}")
    return riemann_zeta(s)


def _sum(terms) -> Real:
    total = Real.exact(0)
    for t in terms:
        total = total + t
    return total


# -------------------------------------------------------------------------
# Elementary reduction
# -------------------------------------------------------------------------

def _canon(t: Triple) -> Triple:
    a, b, c = t
    return (a, b, c) if a >= b else (b, a, c)


def tornheim_reduce(a: int, b: int, c: int, steps: int | None = None) -> dict[Triple, int]:
    """Rewrite T(a, b, c) as an integer combination of other Tornheim sums.

    Each step replaces T(a, b, c) with a, b >= 1 by T(a, b-1, c+1) + T(a-1, b, c+1).
    With ``steps=None`` the expansion runs until every term has a zero among
    its first two arguments, which reproduces Huard's binomial coefficients.
    Triples are returned with the first argument >= the second (T(a,b,c) = T(b,a,c)).
    """
    if min(a, b, c) < 0:
        raise DomainError(f"reduction needs nonnegative integers, got ({a}, {b}, {c})")
    current: dict[Triple, int] = {_canon((a, b, c)): 1}
    done = 0
    while steps is None or done < steps:
        nxt: dict[Triple, int] = defaultdict(int)
        changed = False
        for (x, y, z), k in current.items():
            if x >= 1 and y >= 1:
                nxt[_canon((x, y - 1, z + 1))] += k
                nxt[_canon((x - 1, y, z + 1))] += k
                changed = True
            else:
                nxt[(x, y, z)] += k
        current = {t: k for t, k in nxt.items() if k}
        done += 1
        if not changed:
            break
    return current


# -------------------------------------------------------------------------
# Huard
# -------------------------------------------------------------------------

def tornheim_T_i0(i: int, N: int) -> EvalResult:
    """T(i, 0, N - i) for odd N > 1 as a sum of products of zeta values."""
    if N <= 1 or N % 2 == 0:
        raise UnsupportedError(f"T(i, 0, N-i) closed form needs odd N > 1, got N = {N}")
    if not 1 <= i <= N - 2:
        raise DomainError(f"need 1 <= i <= N-2 for a convergent T(i, 0, N-i), got i = {i}")
    terms = []
    for j in range((N - i - 1) // 2 + 1):
        terms.append(math.comb(N - 2 * j - 1, i - 1) * zeta_int(2 * j) * zeta_int(N - 2 * j))
    for j in range(i // 2 + 1):
        terms.append(math.comb(N - 2 * j - 1, N - i - 1) * zeta_int(2 * j) * zeta_int(N - 2 * j))
    value = (-1) ** i * _sum(terms) + zeta_int(0) * zeta_int(N)
    return EvalResult.of(value, Method.HUARD_ODD_WEIGHT)


def _huard_weights(a: int, b: int) -> dict[int, int]:
    w: dict[int, int] = defaultdict(int)
    for i in range(1, a + 1):
        w[i] += math.comb(a + b - i - 1, a - i)
    for i in range(1, b + 1):
        w[i] += math.comb(a + b - i - 1, b - i)
    return dict(w)


def tornheim_huard(a: int, b: int, c: int) -> EvalResult:
    """T(a, b, c) at integers from the closed forms available at its weight.

    Odd weight: Huard's expansion into T(i, 0, N-i).  Even weight is covered
    only where the needed pieces have closed forms: T(a, b, 0) = zeta(a) zeta(b),
    a, b <= 1 (Tornheim's T(1, 0, N-1) and T(1, 1, N-2)), T(N-2, 1, 1), and the
    symmetric T(2n, 2n, 2n).  Anything else raises UnsupportedError.
    """
    ints = (as_int(a), as_int(b), as_int(c))
    if any(v is None or v < 0 for v in ints):
        raise DomainError(f"Huard evaluation needs nonnegative integers, got ({a}, {b}, {c})")
    a, b, c = ints
    ParamTriple(a, b, c).require_convergent()
    N = a + b + c
    if c == 0:
        return EvalResult.of(zeta_int(a) * zeta_int(b), Method.CLOSED_FORM)
    if a == 0 or b == 0:
        i = max(a, b)
        if N % 2:
            return tornheim_T_i0(i, N)
        if i == 1:
            return tornheim_classics(Classic.T_1_0_A, N)
        raise UnsupportedError(f"T({a}, {b}, {c}): even weight {N} with i = {i} has no closed form here")
    if N % 2:
        terms = [k * tornheim_T_i0(i, N) for i, k in sorted(_huard_weights(a, b).items())]
        return EvalResult.of(_sum(terms), Method.HUARD_ODD_WEIGHT)
    if a == 1 and b == 1:
        return tornheim_classics(Classic.T_1_1_A, N)
    if c == 1 and min(a, b) == 1:
        return tornheim_classics(Classic.T_A_1_1, N)
    if a == b == c and a % 2 == 0:
        return tornheim_symmetric(a // 2, "even")
    raise UnsupportedError(f"T({a}, {b}, {c}): even weight {N} is not covered by the closed forms")


# -------------------------------------------------------------------------
# Tornheim's classical evaluations
# -------------------------------------------------------------------------

class Classic(str, enum.Enum):
    T_1_1_A = "T(1,1,a-2)"
    T_A_1_1 = "T(a-2,1,1)"
    T_1_0_A = "T(1,0,a-1)"


def _t11(a: int) -> Real:
    value = (a - 1) * zeta_int(a)
    for i in range(2, a - 1):
        value = value - zeta_int(i) * zeta_int(a - i)
    return value


def tornheim_classics(selector: Classic | str, a: int) -> EvalResult:
    """One of Tornheim's evaluations with weight a >= 4."""
    selector = Classic(selector)
    if as_int(a) is None or a < 4:
        raise DomainError(f"{selector.value} closed form needs integer a >= 4, got {a}")
    t11 = _t11(a)
    if selector is Classic.T_1_1_A:
        value = t11
    elif selector is Classic.T_A_1_1:
        value = t11 / 2 + zeta_int(a)
    else:
        value = t11 / 2
    return EvalResult.of(value, Method.TORNHEIM_CLASSIC)


# -------------------------------------------------------------------------
# Symmetric sums
# -------------------------------------------------------------------------

def symmetric_even_zeta(n: int) -> EvalResult:
    """T(2n, 2n, 2n) as a sum of products of even zeta values."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    terms = [math.comb(4 * n - 2 * i - 1, 2 * n - 1) * zeta_int(2 * i) * zeta_int(6 * n - 2 * i)
             for i in range(n + 1)]
    return EvalResult.of(_sum(terms) * Fraction(4, 3), Method.SYMMETRIC_EVEN)


def symmetric_even_rational(n: int) -> Fraction:
    """The rational r with T(2n, 2n, 2n) = r (2 pi)^{6n}, from Bernoulli numbers."""
    s = Fraction(0)
    for k in range(n + 1):
        s += (math.comb(4 * n - 2 * k - 1, 2 * n - 1) * bernoulli_number(2 * k)
              * bernoulli_number(6 * n - 2 * k)
              / (math.factorial(2 * k) * math.factorial(6 * n - 2 * k)))
    return (-1) ** n * s / 3


def symmetric_even_integral(n: int) -> Fraction:
    """Same rational r, via the integral of B_{2n}(q)^3 over (0, 1)."""
    return (Fraction((-1) ** (n + 1), 6 * math.factorial(2 * n) ** 3)
            * integral_BBB(2 * n, 2 * n, 2 * n))


def symmetric_even_bernoulli(n: int) -> EvalResult:
    """T(2n, 2n, 2n) = r (2 pi)^{6n} with r rational in Bernoulli numbers."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    r = symmetric_even_rational(n)
    value = to_mpf(r) * (2 * mpmath.pi) ** (6 * n)
    return EvalResult(value, 4 * (6 * n + 1) * eps() * abs(value), Method.SYMMETRIC_EVEN_BERNOULLI)


def symmetric_odd(n: int) -> EvalResult:
    """T(2n+1, 2n+1, 2n+1) as a sum of products of zeta values."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n} (T(1,1,1) = 2 zeta(3) is separate)")
    terms = [math.comb(4 * n - 2 * i + 1, 2 * n) * zeta_int(2 * i) * zeta_int(6 * n - 2 * i + 3)
             for i in range(n + 1)]
    return EvalResult.of(_sum(terms) * -4, Method.SYMMETRIC_ODD)


def tornheim_symmetric(n: int, parity: str) -> EvalResult:
    """T(2n,2n,2n) (``parity="even"``) or T(2n+1,2n+1,2n+1) (``"odd"``).

    The even case is computed both from zeta values and from Bernoulli numbers;
    the returned error covers the disagreement between the two.
    """
    if parity == "odd":
        return symmetric_odd(n)
    if parity != "even":
        raise DomainError(f"parity must be 'even' or 'odd', got {parity!r}")
    z = symmetric_even_zeta(n)
    b = symmetric_even_bernoulli(n)
    err = max(z.err, abs(z.value - b.value) + b.err)
    return EvalResult(z.value, err, Method.SYMMETRIC_EVEN)


def classic_relation_residual(a: int, tol=1e-20) -> mpf:
    """|2 T(a-2,1,1) - T(1,1,a-2) - 2 zeta(a)| with both sums by direct summation."""
    from tornheim.core.direct import tornheim_direct

    lhs = 2 * tornheim_direct(a - 2, 1, 1, tol=tol).value - tornheim_direct(1, 1, a - 2, tol=tol).value
    return abs(lhs - 2 * zeta_int(a).value)
