"""Parameter triples for T(a, b, c) and the errors raised on bad input."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from mpmath import mpf

from tornheim.numeric import to_mpf
from tornheim.specfun import DomainError


class ConvergenceError(DomainError):
    """Parameters outside the region where the double series converges."""


class UnsupportedError(DomainError):
    """No closed form is available for the requested parameters."""


class Kind(str, enum.Enum):
    ALL_REAL = "all-real"
    TWO_INT_ONE_REAL = "two-int-one-real"
    ALL_INT = "all-int"


def as_int(x) -> int | None:
    """x as an int when it is integral, else None."""
    if isinstance(x, int):
        return x
    v = to_mpf(x)
    if v == int(v):
        return int(v)
    return None


@dataclass(frozen=True)
class ParamTriple:
    a: object
    b: object
    c: object

    @property
    def values(self) -> tuple[mpf, mpf, mpf]:
        return to_mpf(self.a), to_mpf(self.b), to_mpf(self.c)

    @property
    def ints(self) -> tuple[int | None, int | None, int | None]:
        return as_int(self.a), as_int(self.b), as_int(self.c)

    @property
    def kind(self) -> Kind:
        n = sum(v is not None for v in self.ints)
        if n == 3:
            return Kind.ALL_INT
        if n == 2:
            return Kind.TWO_INT_ONE_REAL
        return Kind.ALL_REAL

    @property
    def parity_signature(self) -> tuple[int, int, int] | None:
        ints = self.ints
        if any(v is None for v in ints):
            return None
        return tuple(v % 2 for v in ints)

    @property
    def weight(self) -> mpf:
        a, b, c = self.values
        return a + b + c

    def converges(self) -> bool:
        a, b, c = self.values
        return a + c > 1 and b + c > 1 and a + b + c > 2

    def require_convergent(self) -> None:
        if not self.converges():
            raise ConvergenceError(
                f"T({self.a}, {self.b}, {self.c}) diverges: need a+c > 1, b+c > 1, a+b+c > 2")

    def swapped(self) -> "ParamTriple":
        return ParamTriple(self.b, self.a, self.c)

    def __str__(self) -> str:
        return f"T({self.a}, {self.b}, {self.c})"


def p_sign(n: int) -> int:
    """(-1)^{n/2} for even n, (-1)^{(n+1)/2} for odd n."""
    if n % 2 == 0:
        return -1 if (n // 2) % 2 else 1
    return -1 if ((n + 1) // 2) % 2 else 1
