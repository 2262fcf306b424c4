"""Working-precision scalars with an attached absolute error bound.

All evaluators in the package return :class:`Real` (or its subclass
:class:`EvalResult`, which also records how the value was obtained).  The
value is an ``mpmath.mpf`` at the current working precision; ``err`` is a
nonnegative absolute bound that arithmetic propagates conservatively.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath
from mpmath import mp, mpf

DEFAULT_DPS = 30

Number = Union[int, float, Fraction, mpf]


def set_precision(dps: int) -> None:
    """Set the global working precision in significant decimal digits."""
    if dps < 16:
        raise ValueError(f"working precision must be at least 16 digits, got {dps}")
    mp.dps = int(dps)


def get_precision() -> int:
    return mp.dps


def precision_from_env(default: int = DEFAULT_DPS) -> int:
    """Digits requested through ``TORNHEIM_PREC``, else *default*."""
    raw = os.environ.get("TORNHEIM_PREC")
    if raw is None or not raw.strip():
        return default
    return int(raw)


def eps() -> mpf:
    """Unit roundoff at the current precision."""
    return mpf(2) ** (1 - mp.prec)


def to_mpf(x: Number) -> mpf:
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    if isinstance(x, Real):
        return x.value
    return mpf(x)


@dataclass(frozen=True)
class Real:
    """A scalar value with a nonnegative absolute error bound."""

    value: mpf
    err: mpf = mpf(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", to_mpf(self.value))
        e = abs(to_mpf(self.err))
        if mpmath.isfinite(self.value) and not mpmath.isfinite(e):
            raise ValueError("error bound must be finite for a finite value")
        object.__setattr__(self, "err", e)

    @staticmethod
    def exact(x: Number) -> "Real":
        return Real(to_mpf(x), mpf(0))

    @staticmethod
    def _lift(other: "Real | Number") -> "Real":
        if isinstance(other, Real):
            return other
        return Real(to_mpf(other), mpf(0))

    def _round(self, v: mpf, e: mpf) -> "Real":
        return Real(v, e + abs(v) * eps())

    def __add__(self, other):
        o = self._lift(other)
        return self._round(self.value + o.value, self.err + o.err)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        return self._round(self.value - o.value, self.err + o.err)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return Real(-self.value, self.err)

    def __mul__(self, other):
        o = self._lift(other)
        e = abs(self.value) * o.err + abs(o.value) * self.err + self.err * o.err
        return self._round(self.value * o.value, e)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.err >= abs(o.value):
            raise ZeroDivisionError("divisor interval contains zero")
        v = self.value / o.value
        e = (self.err + abs(v) * o.err) / (abs(o.value) - o.err)
        return self._round(v, e)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __abs__(self):
        return Real(abs(self.value), self.err)

    def __float__(self) -> float:
        return float(self.value)

    def close_to(self, other: "Real | Number", tol: Number = 0) -> bool:
        """True when the two values differ by at most ``tol`` plus both error bounds."""
        o = self._lift(other)
        return abs(self.value - o.value) <= to_mpf(tol) + self.err + o.err

    def __repr__(self) -> str:
        return f"Real({mpmath.nstr(self.value, 20)} ± {mpmath.nstr(self.err, 3)})"


class Method(str, enum.Enum):
    """How an :class:`EvalResult` was produced."""

    DIRECT_SUM = "direct-sum"
    HUARD_ODD_WEIGHT = "huard-odd-weight"
    SYMMETRIC_EVEN = "symmetric-even"
    SYMMETRIC_EVEN_BERNOULLI = "symmetric-even-bernoulli"
    SYMMETRIC_ODD = "symmetric-odd"
    TORNHEIM_CLASSIC = "tornheim-classic"
    ANALYTIC_IJ = "analytic-ij"
    TWO_INTEGER_LIMIT = "two-integer-limit"
    PARITY_ASSEMBLY = "parity-assembly"
    MZV_DIRECT = "mzv-direct"
    QUADRATURE = "quadrature"
    CLOSED_FORM = "closed-form"
    RECURRENCE = "recurrence"
    EXACT = "exact"
    SERIES = "series"


@dataclass(frozen=True, repr=False)
class EvalResult(Real):
    """A :class:`Real` tagged with the method that produced it.

    ``heuristic`` marks error estimates that are not bounds (quadrature level
    differences, asymptotic-tail estimates).
    """

    method: Method = Method.EXACT
    heuristic: bool = False

    @classmethod
    def of(cls, r: Real, method: Method, heuristic: bool = False) -> "EvalResult":
        return cls(r.value, r.err, method, heuristic)

    def __repr__(self) -> str:
        tag = "~" if self.heuristic else "±"
        return (f"EvalResult({mpmath.nstr(self.value, 20)} {tag} "
                f"{mpmath.nstr(self.err, 3)}, {self.method.value})")


def combine(method: Method, *parts: Real, value: Real) -> EvalResult:
    """Tag an assembled value, marking it heuristic if any input was."""
    heuristic = any(getattr(p, "heuristic", False) for p in parts)
    return EvalResult.of(value, method, heuristic)
