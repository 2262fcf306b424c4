"""Registry of identity checks and the report they produce.

Every check computes a left and a right side independently and compares
them against a pinned absolute tolerance.  Checks are grouped in suites
(specfun, bernoulli, negapoly, integrals, tornheim) and carry stable ids
of the form ``<anchor>-<indices>``.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

import mpmath
from mpmath import mp, mpf

from tornheim.bernoulli_algebra import cube_expand, integral_BB, product_expand
from tornheim.core.analytic import (
    analytic_limit,
    fourier_identity_check,
    prop31_check,
    tornheim_analytic,
    tornheim_two_int,
    zbar_plus_even_residual,
    zbar_plus_odd_limit,
)
from tornheim.core.closed_forms import (
    Classic,
    symmetric_even_bernoulli,
    symmetric_even_integral,
    symmetric_even_rational,
    symmetric_even_zeta,
    symmetric_odd,
    tornheim_T_i0,
    tornheim_classics,
    tornheim_huard,
)
from tornheim.core.direct import DEFAULT_MAX_TERMS, mzv_direct, tornheim_direct
from tornheim.core.integer import k_reduction_check, parity_case, tornheim_integer, weight_table_check
from tornheim.core.params import ParamTriple, UnsupportedError
from tornheim.core.qr import q1_exact, q2_closed, q_direct, q_recurrence_residual, r_direct, r_integral
from tornheim.numeric import Real, get_precision
from tornheim.polygamma_neg import negapolygamma, negapolygamma_derivative_check, negapolygamma_raw
from tornheim.quadrature import (
    QuadratureConfig,
    integral_M,
    integral_M_quad,
    integral_Mstar,
    integral_Mstar_quad,
    integral_N,
    integral_N_quad,
    integral_U,
    integrate_01,
    loggamma_moments_check,
    two_zeta_integral,
    two_zeta_integral_quad,
)
from tornheim.specfun import (
    bernoulli_poly,
    digamma,
    hurwitz_zeta,
    hurwitz_zeta_zderiv,
    log_2pi,
    log_gamma,
    riemann_zeta,
    zeta_raw,
)

__all__ = [
    "SUITES",
    "DEFAULT_TOL",
    "ReportEntry",
    "Check",
    "VerifyConfig",
    "Report",
    "build_checks",
    "run_checks",
]

SUITES = ("specfun", "bernoulli", "negapoly", "integrals", "tornheim")
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ReportEntry:
    check_id: str
    lhs: float
    rhs: float
    residual: float
    tolerance: float
    status: str
    notes: str = ""

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class VerifyConfig:
    tol: float | None = None
    max_terms: int = DEFAULT_MAX_TERMS
    quad: QuadratureConfig = field(default_factory=QuadratureConfig)

    def direct(self, a, b, c) -> Real:
        return tornheim_direct(a, b, c, max_terms=self.max_terms)


@dataclass(frozen=True)
class Check:
    check_id: str
    suite: str
    run: Callable[[VerifyConfig], tuple]
    tolerance: float = DEFAULT_TOL
    notes: str = ""


def _mp(x) -> mpf:
    if isinstance(x, Real):
        return x.value
    if isinstance(x, Fraction):
        return mpf(x.numerator) / x.denominator
    return mpf(x)


def _fmt(x) -> str:
    return str(x).replace(" ", "")


def _ids(*xs) -> str:
    return "-".join(_fmt(x) for x in xs)


def _z(s) -> mpf:
    return riemann_zeta(s).value


# -------------------------------------------------------------------------
# specfun
# -------------------------------------------------------------------------

def _specfun_checks() -> Iterable[Check]:
    for k, q in itertools.product(range(1, 9), ("0.1", "0.3", "0.7", "1.0")):
        yield Check(f"zetaber-{k}-{q}", "specfun",
                    lambda cfg, k=k, q=q: (hurwitz_zeta(1 - k, mpf(q)),
                                           -bernoulli_poly(k, mpf(q)) / k))
    for q in ("0.1", "0.25", "0.5", "0.75", "1.0"):
        yield Check(f"lerch-{q}", "specfun",
                    lambda cfg, q=q: (hurwitz_zeta_zderiv(0, mpf(q)),
                                      log_gamma(mpf(q)).value - log_2pi() / 2))
    for z, q in (("1.5", "0.3"), ("-2.5", "0.7"), ("3", "0.05"), ("0.5", "0.9")):
        yield Check(f"hurzetadef-{z}-{q}", "specfun",
                    lambda cfg, z=z, q=q: (hurwitz_zeta(mpf(z), mpf(q)), mpmath.zeta(mpf(z), mpf(q))),
                    notes="oracle: mpmath.zeta")
        yield Check(f"hurzeta-zderiv-{z}-{q}", "specfun",
                    lambda cfg, z=z, q=q: (hurwitz_zeta_zderiv(mpf(z), mpf(q)),
                                           mpmath.zeta(mpf(z), mpf(q), 1)),
                    notes="oracle: mpmath.zeta(derivative=1)")
    yield Check("riemannzeta-2", "specfun", lambda cfg: (riemann_zeta(2), mp.pi ** 2 / 6))
    yield Check("riemannzeta-4", "specfun", lambda cfg: (riemann_zeta(4), mp.pi ** 4 / 90))
    yield Check("riemannzeta-prime-0", "specfun",
                lambda cfg: (hurwitz_zeta_zderiv(0, 1), -mpmath.log(2 * mp.pi) / 2))
    for z in ("-0.5", "0.5", "-3.5"):
        yield Check(f"intzeta1-{z}", "specfun",
                    lambda cfg, z=z: (integrate_01(lambda q: zeta_raw(mpf(z), q), cfg.quad), 0))
    for q in ("0.2", "0.5", "0.9"):
        yield Check(f"loggamma-{q}", "specfun",
                    lambda cfg, q=q: (log_gamma(mpf(q)), mpmath.loggamma(mpf(q))),
                    notes="oracle: mpmath.loggamma")
        yield Check(f"digamma-{q}", "specfun",
                    lambda cfg, q=q: (digamma(mpf(q)), mpmath.digamma(mpf(q))),
                    notes="oracle: mpmath.digamma")


# -------------------------------------------------------------------------
# bernoulli
# -------------------------------------------------------------------------

def _chebyshev_nodes(n: int) -> list[mpf]:
    return [(1 - mpmath.cos((2 * k + 1) * mp.pi / (2 * n))) / 2 for k in range(n)]


def _max_pointwise(expansion, direct, nodes) -> mpf:
    return max(abs(expansion(q) - direct(q)) for q in nodes)


def _bernoulli_checks() -> Iterable[Check]:
    nodes = _chebyshev_nodes(21)
    for n in range(1, 9):
        q = mpf("0.37")
        yield Check(f"bergen1-{n}", "bernoulli",
                    lambda cfg, n=n, q=q: (bernoulli_poly(n, q + 1) - bernoulli_poly(n, q),
                                           n * q ** (n - 1)))
    for n1, n2 in ((1, 1), (2, 3), (3, 3), (4, 5), (6, 2)):
        yield Check(f"prod-2-bernoullis-{n1}-{n2}", "bernoulli",
                    lambda cfg, n1=n1, n2=n2: (
                        _max_pointwise(product_expand(n1, n2),
                                       lambda q: bernoulli_poly(n1, q) * bernoulli_poly(n2, q), nodes),
                        0),
                    notes="max over 21 Chebyshev nodes")
    for n in range(1, 7):
        yield Check(f"cube-bernoulli-{n}", "bernoulli",
                    lambda cfg, n=n: (
                        _max_pointwise(cube_expand(n), lambda q: bernoulli_poly(n, q) ** 3, nodes), 0),
                    notes="max over 21 Chebyshev nodes")
        yield Check(f"cube-bernoulli-iterated-{n}", "bernoulli",
                    lambda cfg, n=n: (
                        _max_pointwise(cube_expand(n), product_expand(n, n).times_bernoulli(n), nodes),
                        0))
    for n1, n2 in ((1, 1), (2, 4), (3, 5), (4, 4)):
        yield Check(f"apostol-{n1}-{n2}", "bernoulli",
                    lambda cfg, n1=n1, n2=n2: (
                        integral_BB(n1, n2),
                        integrate_01(lambda q: bernoulli_poly(n1, q) * bernoulli_poly(n2, q), cfg.quad)),
                    notes="exact rational vs quadrature")
    for n in (1, 2, 3):
        yield Check(f"T-sym-even-bbb-{n}", "bernoulli",
                    lambda cfg, n=n: (symmetric_even_integral(n), symmetric_even_rational(n)),
                    tolerance=0.0, notes="exact rationals")


# -------------------------------------------------------------------------
# negapoly
# -------------------------------------------------------------------------

def _negapoly_checks() -> Iterable[Check]:
    for q in ("0.2", "0.5", "0.8"):
        yield Check(f"bal-negapolygamma-1-{q}", "negapoly",
                    lambda cfg, q=q: (negapolygamma(1, mpf(q)),
                                      mpmath.loggamma(mpf(q)) - log_2pi() / 2),
                    notes="psi^(-1) = ln Gamma - ln sqrt(2 pi)")
    for m in range(2, 9):
        yield Check(f"balanced-integral-{m}", "negapoly",
                    lambda cfg, m=m: (integrate_01(lambda q: negapolygamma_raw(m, q), cfg.quad), 0))
        yield Check(f"balanced-endpoints-{m}", "negapoly",
                    lambda cfg, m=m: (negapolygamma(m, mpf("1e-12")),
                                      negapolygamma(m, 1 - mpf("1e-12"))),
                    notes="psi^(-m)(0) = psi^(-m)(1)")
    for m, q, d, tol in ((2, "0.5", "1e-5", 1e-8), (3, "0.3", "1e-5", 1e-8),
                         (2, "0.9", "1e-4", 1e-6), (4, "0.3", "1e-5", 1e-8),
                         (5, "0.3", "1e-5", 1e-8), (6, "0.3", "1e-5", 1e-8)):
        yield Check(f"der-negapolygamma-{m}-{q}", "negapoly",
                    lambda cfg, m=m, q=q, d=d: (negapolygamma_derivative_check(m, mpf(q), mpf(d)), 0),
                    tolerance=tol, notes=f"central difference, delta={d}")


# -------------------------------------------------------------------------
# integrals
# -------------------------------------------------------------------------

def _u12_closed() -> mpf:
    return -mp.pi ** 2 / 240 - mpmath.log(2) * _z(3) / (4 * mp.pi ** 2)


def _integral_checks() -> Iterable[Check]:
    yield Check("eq-l1", "integrals",
                lambda cfg: ((m := loggamma_moments_check(cfg.quad)).L1_quad, m.L1_closed),
                tolerance=1e-12)
    yield Check("eq-l2", "integrals",
                lambda cfg: ((m := loggamma_moments_check(cfg.quad)).L2_quad, m.L2_closed),
                tolerance=1e-9)
    for a, b in (("2", "2"), ("2.5", "3.5")):
        yield Check(f"twozetaa-{a}-{b}", "integrals",
                    lambda cfg, a=a, b=b: (two_zeta_integral(mpf(a), mpf(b)),
                                           two_zeta_integral_quad(mpf(a), mpf(b), cfg=cfg.quad)),
                    tolerance=1e-10)
        yield Check(f"twozeta1a-{a}-{b}", "integrals",
                    lambda cfg, a=a, b=b: (two_zeta_integral(mpf(a), mpf(b), True),
                                           two_zeta_integral_quad(mpf(a), mpf(b), True, cfg.quad)),
                    tolerance=1e-10)
    for m, n in itertools.product(range(1, 4), repeat=2):
        yield Check(f"eval-N-closed-vs-quad-{m}-{n}", "integrals",
                    lambda cfg, m=m, n=n: (integral_N(m, n), integral_N_quad(m, n, cfg.quad)),
                    tolerance=1e-10)
        yield Check(f"eval-M-{m}-{n}", "integrals",
                    lambda cfg, m=m, n=n: (integral_M(m, n), integral_M_quad(m, n, cfg.quad)),
                    tolerance=1e-10)
        yield Check(f"eval-Mstar-{m}-{n}", "integrals",
                    lambda cfg, m=m, n=n: (integral_Mstar(m, n), integral_Mstar_quad(m, n, cfg.quad)),
                    tolerance=1e-10)
    yield Check("eval-N-1-2-zeta3", "integrals",
                lambda cfg: (integral_N(1, 2), _z(3) / (4 * mp.pi ** 2)),
                notes="N_{1,2} = zeta(3) / (4 pi^2)")
    yield Check("eq-U-1-2", "integrals",
                lambda cfg: (integral_U(1, 2, cfg.quad), _u12_closed()))
    yield Check("Q1-1-1-2", "integrals",
                lambda cfg: (q1_exact(1, 1, 2), Fraction(1, 180)), tolerance=0.0,
                notes="exact rational")
    for t in ((2, 2, 1), (1, 1, 1), (2, 2, 3)):
        yield Check(f"Q2-explicit-{_ids(*t)}", "integrals",
                    lambda cfg, t=t: (q2_closed(*t), q_direct(2, *t, cfg.quad)), tolerance=1e-10)
    for j in (3, 4, 5, 6):
        for t in ((2, 2, 2), (2, 3, 1)):
            yield Check(f"recq{j}-{_ids(*t)}", "integrals",
                        lambda cfg, j=j, t=t: (q_recurrence_residual(j, *t, cfg.quad), 0),
                        tolerance=1e-8, notes="all Q values by quadrature of the definition")
    for j in range(1, 7):
        for t in ((1, 1, 2), (2, 2, 1)):
            yield Check(f"rel-RQ{j}-{_ids(*t)}", "integrals",
                        lambda cfg, j=j, t=t: (r_integral(j, *t, cfg.quad), r_direct(j, *t, cfg.quad)),
                        tolerance=1e-8, notes="R from Q vs quadrature with A_k")
    for z, q in (("2.5", "0.3"), ("2", "0.25")):
        for part in ("cos", "sin"):
            yield Check(f"fourier-{part}-{z}-{q}", "integrals",
                        lambda cfg, z=z, q=q, part=part: (
                            getattr(fourier_identity_check(mpf(z), mpf(q)), f"{part}_residual"), 0),
                        notes="trigonometric sums in double precision")
    for m, n, tol in ((3, 1, 1e-8), (3, 2, 1e-8), (5, 1, 1e-7)):
        yield Check(f"k-reduction-{m}-{n}", "integrals",
                    lambda cfg, m=m, n=n: (
                        (r := k_reduction_check(m, n, cfg.quad)).lhs, r.rhs),
                    tolerance=tol, notes="negapolygamma index in the first subscript")


# -------------------------------------------------------------------------
# tornheim
# -------------------------------------------------------------------------

def _triples(weight: int) -> list[tuple[int, int, int]]:
    return [(a, b, weight - a - b) for a in range(1, weight - 1) for b in range(1, weight - a)]


def _route_value(route: str, cfg: VerifyConfig) -> Real:
    return {
        "zeta": lambda: symmetric_even_zeta(1),
        "bernoulli": lambda: symmetric_even_bernoulli(1),
        "integer": lambda: tornheim_integer(2, 2, 2, cfg.quad),
        "direct": lambda: cfg.direct(2, 2, 2),
    }[route]()


_EX62 = {
    (2, 1, 2): lambda: mp.pi ** 2 * _z(3) / 6 - 3 * _z(5) / 2,
    (2, 3, 2): lambda: -mp.pi ** 2 * _z(5) / 6 + 2 * _z(7),
    (4, 3, 2): lambda: mp.pi ** 4 * _z(5) / 90 + mp.pi ** 2 * _z(7) / 6 - 5 * _z(9) / 2,
}


def _tornheim_checks() -> Iterable[Check]:
    yield Check("intro-T111", "tornheim", lambda cfg: (cfg.direct(1, 1, 1), 2 * _z(3)),
                tolerance=1e-10)
    yield Check("thm-zagr-case5-T112", "tornheim",
                lambda cfg: (tornheim_integer(1, 1, 2, cfg.quad), _z(4) / 2), tolerance=1e-8,
                notes="quadrature K integrals vs zeta(4)/2")
    yield Check("ex61-T112-U", "tornheim",
                lambda cfg: (-4 * mp.pi ** 2 * integral_U(1, 2, cfg.quad).value
                             - _z(3) * mpmath.log(2) - mp.pi ** 4 / 90, _z(4) / 2))
    yield Check("ex61-T112-U-closed", "tornheim",
                lambda cfg: (-4 * mp.pi ** 2 * _u12_closed() - _z(3) * mpmath.log(2) - mp.pi ** 4 / 90,
                             _z(4) / 2))
    for t, f in _EX62.items():
        yield Check(f"ex62-T{_ids(*t).replace('-', '')}-direct", "tornheim",
                    lambda cfg, t=t, f=f: (cfg.direct(*t), f()), tolerance=1e-8)
        yield Check(f"ex62-T{_ids(*t).replace('-', '')}-integer", "tornheim",
                    lambda cfg, t=t, f=f: (tornheim_integer(*t, cfg.quad), f()), tolerance=1e-8)
    for w in range(3, 8):
        for t in _triples(w):
            if t == (1, 1, 2):
                continue
            label = f"thm-zagr-case{parity_case(*t)}-T{''.join(map(str, t))}"
            yield Check(label, "tornheim",
                        lambda cfg, t=t: (tornheim_integer(*t, cfg.quad), cfg.direct(*t)),
                        tolerance=1e-8, notes="parity assembly vs direct sum")
    routes = ("zeta", "bernoulli", "integer", "direct")
    for r1, r2 in itertools.combinations(routes, 2):
        yield Check(f"T-sym-even-1-{r1}-vs-{r2}", "tornheim",
                    lambda cfg, r1=r1, r2=r2: (_route_value(r1, cfg), _route_value(r2, cfg)))
    yield Check("T-sym-even-2-zeta-vs-bernoulli", "tornheim",
                lambda cfg: (symmetric_even_zeta(2), symmetric_even_bernoulli(2)), tolerance=1e-12)
    yield Check("T-sym-even-2-direct", "tornheim",
                lambda cfg: (symmetric_even_zeta(2), cfg.direct(4, 4, 4)))
    for n in (1, 2):
        k = 2 * n + 1
        yield Check(f"T-sym-odd-{n}", "tornheim",
                    lambda cfg, n=n, k=k: (symmetric_odd(n), cfg.direct(k, k, k)))
    for a in range(4, 9):
        yield Check(f"classic-T11a-{a}", "tornheim",
                    lambda cfg, a=a: (tornheim_classics(Classic.T_1_1_A, a), cfg.direct(1, 1, a - 2)))
        yield Check(f"classic-Ta11-{a}", "tornheim",
                    lambda cfg, a=a: (tornheim_classics(Classic.T_A_1_1, a), cfg.direct(a - 2, 1, 1)))
        yield Check(f"classic-T10a-{a}", "tornheim",
                    lambda cfg, a=a: (tornheim_classics(Classic.T_1_0_A, a), cfg.direct(1, 0, a - 1)))
    for i, n in ((1, 5), (2, 5), (3, 7)):
        yield Check(f"huard-Ti0-{i}-{n}", "tornheim",
                    lambda cfg, i=i, n=n: (tornheim_T_i0(i, n), cfg.direct(i, 0, n - i)))
    for w in (5, 7):
        for a in range(0, w):
            for b in range(0, w - a):
                c = w - a - b
                if c < 1 or a + b == 0 or not ParamTriple(a, b, c).converges():
                    continue
                yield Check(f"huard-odd-{a}-{b}-{c}", "tornheim",
                            lambda cfg, t=(a, b, c): (tornheim_huard(*t), cfg.direct(*t)))
    yield Check("huard-even-2-1-3", "tornheim",
                lambda cfg: (tornheim_huard(2, 1, 3), cfg.direct(2, 1, 3)),
                notes="no closed form at this even weight")
    yield Check("elem00-2-3-2", "tornheim",
                lambda cfg: (cfg.direct(2, 3, 2), cfg.direct(1, 3, 3) + cfg.direct(2, 2, 3)))
    for a, c in ((2, 3), (2, 2), (3, 2)):
        yield Check(f"mzv-{a}-{c}", "tornheim",
                    lambda cfg, a=a, c=c: (cfg.direct(a, 0, c), mzv_direct(c, a)), tolerance=1e-10)
    for t in (("1.5", "1.5", "1.5"), ("2.5", "1.5", "2.5"), ("1.5", "2.5", "3.5")):
        yield Check(f"thm36-{_ids(*t)}", "tornheim",
                    lambda cfg, t=t: (tornheim_analytic(*map(mpf, t), cfg=cfg.quad),
                                      cfg.direct(*map(mpf, t))),
                    tolerance=1e-7)
    for n1, n2, c in ((2, 2, "2.5"), (2, 1, "2.5"), (1, 1, "2.5")):
        yield Check(f"two-int-{n1}-{n2}-{c}", "tornheim",
                    lambda cfg, n1=n1, n2=n2, c=c: (tornheim_two_int(n1, n2, mpf(c), cfg.quad),
                                                    cfg.direct(n1, n2, mpf(c))),
                    tolerance=1e-7)
    for t, tol in (((2, 2, 2), 1e-9), ((1, 3, 2), 1e-9), ((3, 3, 2), 1e-9), (("1.5", "1.5", "2.5"), 1e-8)):
        for kind in ("sym", "nsym"):
            yield Check(f"prop31-{kind}-{_ids(*t)}", "tornheim",
                        lambda cfg, t=t, kind=kind: (
                            getattr(r := prop31_check(*map(mpf, t), cfg=cfg.quad), f"{kind}_lhs"),
                            getattr(r, f"{kind}_rhs")),
                        tolerance=tol, notes="T by direct sum, I and J by quadrature")
    for t in ((2, 2, 2), (2, 3, 2), (3, 3, 3)):
        yield Check(f"limit-ca-{_ids(*t)}", "tornheim",
                    lambda cfg, t=t: (analytic_limit(*t, cfg=cfg.quad), tornheim_integer(*t, cfg.quad)),
                    tolerance=1e-6, notes="eps in {1e-2, 1e-3}, Richardson in eps^2")
    for n in (2, 4, 6):
        yield Check(f"zbar-plus-even-{n}", "tornheim",
                    lambda cfg, n=n: (max(zbar_plus_even_residual(n, mpf(q)) for q in ("0.1", "0.35", "0.8")),
                                      0))
    for n in (1, 3, 5):
        yield Check(f"zbar-plus-odd-{n}", "tornheim",
                    lambda cfg, n=n: zbar_plus_odd_limit(n, mpf("0.3")),
                    tolerance=1e-8, notes="c = n +- {1e-2, 1e-3}, Richardson in eps^2")
    for label in ("T111", "T112", "T121", "T113", "T122", "T131", "T221"):
        yield Check(f"ex63-{label}", "tornheim",
                    lambda cfg, label=label: _weight_table_side(label, cfg), tolerance=1e-7,
                    notes="K, K*, Z, Z*, U by quadrature")


_weight_table_cache: dict = {}


def _weight_table_side(label: str, cfg: VerifyConfig) -> tuple:
    key = (cfg.quad, get_precision())
    if key not in _weight_table_cache:
        _weight_table_cache.clear()
        _weight_table_cache[key] = {c.label: c for c in weight_table_check(cfg.quad)}
    c = _weight_table_cache[key][label]
    return c.lhs, c.rhs


# -------------------------------------------------------------------------
# Running
# -------------------------------------------------------------------------

_BUILDERS = {
    "specfun": _specfun_checks,
    "bernoulli": _bernoulli_checks,
    "negapoly": _negapoly_checks,
    "integrals": _integral_checks,
    "tornheim": _tornheim_checks,
}


def build_checks(suite: str = "all") -> list[Check]:
    """The checks of one suite (or all of them) in a fixed order."""
    if suite != "all" and suite not in _BUILDERS:
        raise ValueError(f"unknown suite {suite!r}; choose one of {', '.join(SUITES)} or all")
    names = SUITES if suite == "all" else (suite,)
    checks = [c for name in names for c in _BUILDERS[name]()]
    ids = [c.check_id for c in checks]
    if len(ids) != len(set(ids)):
        dup = sorted({i for i in ids if ids.count(i) > 1})
        raise RuntimeError(f"duplicate check ids: {dup}")
    return checks


def _run_one(check: Check, cfg: VerifyConfig) -> ReportEntry:
    tol = check.tolerance if cfg.tol is None else cfg.tol
    try:
        lhs, rhs = check.run(cfg)
    except UnsupportedError as exc:
        return ReportEntry(check.check_id, math.nan, math.nan, math.nan, tol, "skipped", str(exc))
    except Exception as exc:  # noqa: BLE001 - the failure is the report
        return ReportEntry(check.check_id, math.nan, math.nan, math.nan, tol, "fail",
                           f"{type(exc).__name__}: {exc}")
    if isinstance(lhs, Fraction) and isinstance(rhs, Fraction):
        residual = float(abs(lhs - rhs))
    else:
        residual = float(abs(_mp(lhs) - _mp(rhs)))
    status = "pass" if residual <= tol else "fail"
    return ReportEntry(check.check_id, float(_mp(lhs)), float(_mp(rhs)), residual, tol, status,
                       check.notes)


@dataclass
class Report:
    entries: list[ReportEntry]
    header: dict

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.counts["fail"] == 0

    def to_dict(self) -> dict:
        return {"header": {**self.header, "counts": self.counts},
                "entries": [e.to_dict() for e in self.entries]}


def run_checks(suite: str = "all", cfg: VerifyConfig | None = None,
               progress: Callable[[ReportEntry], None] | None = None) -> Report:
    """Run a suite serially and collect the report.

    mpmath keeps its working precision in one process-wide context, so
    checks are not run in threads.
    """
    cfg = cfg or VerifyConfig()
    checks = build_checks(suite)
    started = time.perf_counter()
    entries = []
    for check in checks:
        entry = _run_one(check, cfg)
        entries.append(entry)
        if progress is not None:
            progress(entry)
    header = {
        "suite": suite,
        "precision_dps": get_precision(),
        "tolerance_override": cfg.tol,
        "default_tolerance": DEFAULT_TOL,
        "max_terms": cfg.max_terms,
        "quadrature": asdict(cfg.quad),
        "elapsed_s": round(time.perf_counter() - started, 3),
    }
    return Report(entries, header)
