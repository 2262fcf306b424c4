"""Exact algebra of Bernoulli polynomials.

Products of Bernoulli polynomials are expanded in the Bernoulli basis with
rational coefficients; integrals over (0, 1) of products of two and three
Bernoulli polynomials are returned as exact fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from tornheim.numeric import to_mpf
from tornheim.specfun import bernoulli_number, bernoulli_poly, bernoulli_poly_coeffs

__all__ = [
    "BernPolyExpansion",
    "product_expand",
    "cube_expand",
    "integral_BB",
    "integral_BBB",
    "poly_mul",
    "to_bernoulli_basis",
]


@dataclass(frozen=True)
class BernPolyExpansion:
    """sum_j coeffs[j] * B_j(q) + constant, with exact rational coefficients.

    Only indices j >= 1 appear in ``coeffs``; the B_0 = 1 component is kept in
    ``constant`` so that the integral over (0, 1) is exactly ``constant``.
    """

    coeffs: dict[int, Fraction] = field(default_factory=dict)
    constant: Fraction = Fraction(0)

    def __call__(self, q):
        """Evaluate at q; exact for int/Fraction input."""
        if isinstance(q, (int, Fraction)):
            return self.constant + sum(
                (c * bernoulli_poly(j, q) for j, c in self.coeffs.items()), Fraction(0))
        total = to_mpf(self.constant)
        for j, c in self.coeffs.items():
            total += to_mpf(c) * bernoulli_poly(j, q)
        return total

    def integral(self) -> Fraction:
        return self.constant

    def times_bernoulli(self, m: int) -> "BernPolyExpansion":
        """Multiply by B_m(q) and re-expand."""
        out: dict[int, Fraction] = {}
        const = Fraction(0)
        if self.constant:
            out[m] = out.get(m, Fraction(0)) + self.constant
        for j, c in self.coeffs.items():
            sub = product_expand(j, m)
            const += c * sub.constant
            for i, d in sub.coeffs.items():
                out[i] = out.get(i, Fraction(0)) + c * d
        return BernPolyExpansion({k: v for k, v in out.items() if v}, const)

    def polynomial(self) -> list[Fraction]:
        """Monomial coefficients, increasing powers."""
        deg = max(self.coeffs, default=0)
        poly = [Fraction(0)] * (deg + 1)
        poly[0] += self.constant
        for j, c in self.coeffs.items():
            for i, b in enumerate(bernoulli_poly_coeffs(j)):
                poly[i] += c * b
        return poly


def _pair_weight(n1: int, n2: int, k: int) -> int:
    return n1 * math.comb(n2, 2 * k) + n2 * math.comb(n1, 2 * k)


def product_expand(n1: int, n2: int) -> BernPolyExpansion:
    """B_{n1}(q) B_{n2}(q) in the Bernoulli basis."""
    if n1 < 1 or n2 < 1:
        raise ValueError(f"indices must be positive, got ({n1}, {n2})")
    kmax = max(n1 // 2, n2 // 2)
    coeffs: dict[int, Fraction] = {}
    for k in range(kmax + 1):
        j = n1 + n2 - 2 * k
        if j < 1:
            break
        w = _pair_weight(n1, n2, k)
        if w == 0:
            continue
        c = w * bernoulli_number(2 * k) / j
        if c:
            coeffs[j] = coeffs.get(j, Fraction(0)) + c
    const = (-1) ** (n1 + 1) * Fraction(math.factorial(n1) * math.factorial(n2),
                                        math.factorial(n1 + n2)) * bernoulli_number(n1 + n2)
    return BernPolyExpansion(coeffs, const)


def square_expand(n: int) -> BernPolyExpansion:
    """B_n(q)^2 from the closed square formula (cross-checks product_expand)."""
    coeffs: dict[int, Fraction] = {}
    for k in range(n // 2 + 1):
        c = Fraction(n * math.comb(n, 2 * k), n - k) * bernoulli_number(2 * k)
        if c:
            coeffs[2 * n - 2 * k] = c
    const = (-1) ** (n + 1) * bernoulli_number(2 * n) / math.comb(2 * n, n)
    return BernPolyExpansion(coeffs, const)


def cube_expand(n: int) -> BernPolyExpansion:
    """B_n(q)^3 from the closed cube formula."""
    if n < 1:
        raise ValueError(f"index must be positive, got {n}")
    coeffs: dict[int, Fraction] = {}

    def add(j: int, c: Fraction) -> None:
        if c:
            coeffs[j] = coeffs.get(j, Fraction(0)) + c

    for k in range(n // 2 + 1):
        outer = Fraction(n * math.comb(n, 2 * k), n - k) * bernoulli_number(2 * k)
        if not outer:
            continue
        for j in range(n - k + 1):
            deg = 3 * n - 2 * k - 2 * j
            w = n * math.comb(2 * n - 2 * k, 2 * j) + 2 * (n - k) * math.comb(n, 2 * j)
            add(deg, outer * w * bernoulli_number(2 * j) / deg)
    sign = (-1) ** (n + 1)
    add(n, sign * bernoulli_number(2 * n) / math.comb(2 * n, n))
    const = Fraction(0)
    for k in range(n // 2 + 1):
        const += (math.comb(2 * n - 2 * k - 1, n - 1) * bernoulli_number(2 * k)
                  * bernoulli_number(3 * n - 2 * k)
                  / (math.factorial(2 * k) * math.factorial(3 * n - 2 * k)))
    const *= sign * 2 * math.factorial(n) ** 3
    return BernPolyExpansion({k: v for k, v in coeffs.items() if v}, const)


def integral_BB(n1: int, n2: int) -> Fraction:
    """Exact integral over (0, 1) of B_{n1}(q) B_{n2}(q)."""
    if n1 < 1 or n2 < 1:
        raise ValueError(f"indices must be positive, got ({n1}, {n2})")
    return ((-1) ** (n1 + 1) * Fraction(math.factorial(n1) * math.factorial(n2),
                                        math.factorial(n1 + n2))
            * bernoulli_number(n1 + n2))


def integral_BBB(n1: int, n2: int, n3: int) -> Fraction:
    """Exact integral over (0, 1) of B_{n1} B_{n2} B_{n3} (Carlitz's formula)."""
    if min(n1, n2, n3) < 1:
        raise ValueError(f"indices must be positive, got ({n1}, {n2}, {n3})")
    total = Fraction(0)
    s = n1 + n2
    for k in range((s - 1) // 2 + 1):
        w = _pair_weight(n1, n2, k)
        if not w:
            continue
        total += (w * Fraction(math.factorial(s - 2 * k - 1), math.factorial(s + n3 - 2 * k))
                  * bernoulli_number(2 * k) * bernoulli_number(s + n3 - 2 * k))
    return (-1) ** (n3 + 1) * math.factorial(n3) * total


def poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def to_bernoulli_basis(poly: list[Fraction]) -> BernPolyExpansion:
    """Rewrite a monomial-coefficient polynomial in the Bernoulli basis."""
    rest = list(poly)
    coeffs: dict[int, Fraction] = {}
    for d in range(len(rest) - 1, 0, -1):
        c = rest[d]
        if c:
            coeffs[d] = c
            for i, b in enumerate(bernoulli_poly_coeffs(d)):
                rest[i] -= c * b
    return BernPolyExpansion(coeffs, rest[0] if rest else Fraction(0))
