"""One entry point for T(a, b, c) over every evaluator."""

from __future__ import annotations

from tornheim.core.analytic import tornheim_analytic, tornheim_two_int
from tornheim.core.closed_forms import tornheim_huard
from tornheim.core.direct import DEFAULT_MAX_TERMS, tornheim_direct
from tornheim.core.integer import tornheim_integer
from tornheim.core.params import Kind, ParamTriple, UnsupportedError
from tornheim.numeric import EvalResult, Method
from tornheim.quadrature import QuadratureConfig
from tornheim.specfun import DomainError, riemann_zeta

__all__ = ["METHODS", "evaluate"]

METHODS = ("auto", "direct", "analytic", "integer", "huard")


def _analytic(p: ParamTriple, cfg: QuadratureConfig | None) -> EvalResult:
    a, b, c = p.values
    na, nb, nc = p.ints
    if na is None and nb is None and nc is None:
        return tornheim_analytic(a, b, c, cfg)
    if na is not None and nb is not None and nc is None and na >= 1 and nb >= 1:
        return tornheim_two_int(na, nb, c, cfg)
    raise UnsupportedError(
        f"{p}: the analytic route needs all parameters non-integer, "
        "or a, b positive integers with c non-integer")


def evaluate(a, b, c, method: str = "auto", cfg: QuadratureConfig | None = None,
              max_terms: int = DEFAULT_MAX_TERMS) -> EvalResult:
    """T(a, b, c) by the selected method.

    ``auto`` uses an exact closed form when one exists (T(a, b, 0) and
    Huard-type evaluations at integers) and otherwise the direct sum,
    which is the most accurate general route.
    """
    if method not in METHODS:
        raise DomainError(f"unknown method {method!r}; choose one of {', '.join(METHODS)}")
    p = ParamTriple(a, b, c)
    p.require_convergent()
    if method == "direct":
        return tornheim_direct(a, b, c, max_terms=max_terms)
    if method == "analytic":
        return _analytic(p, cfg)
    if method == "integer":
        if p.kind is not Kind.ALL_INT or min(p.ints) < 1:
            raise DomainError(f"{p}: the integer route needs positive integers")
        return tornheim_integer(*p.ints, cfg=cfg)
    if method == "huard":
        return tornheim_huard(a, b, c)
    if p.values[2] == 0:
        return EvalResult.of(riemann_zeta(p.values[0]) * riemann_zeta(p.values[1]),
                             Method.CLOSED_FORM)
    if p.kind is Kind.ALL_INT and min(p.ints) >= 0:
        try:
            return tornheim_huard(a, b, c)
        except UnsupportedError:
            pass
    return tornheim_direct(a, b, c, max_terms=max_terms)
