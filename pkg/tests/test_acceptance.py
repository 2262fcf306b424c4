"""Acceptance criteria, one line of output per criterion.

Each criterion collects (label, residual, tolerance) triples, records a
single PASS/FAIL line (shown in the terminal summary) and asserts.
"""

import itertools
from fractions import Fraction

import mpmath
from mpmath import mp, mpf

from conftest import ACCEPTANCE_LINES
from tornheim.core.analytic import prop31_check, tornheim_analytic, tornheim_two_int
from tornheim.core.closed_forms import (
    symmetric_even_bernoulli,
    symmetric_even_zeta,
    symmetric_odd,
    tornheim_huard,
)
from tornheim.core.direct import mzv_check, tornheim_direct
from tornheim.core.integer import tornheim_integer, weight_table_check
from tornheim.core.params import ParamTriple
from tornheim.core.qr import q1_exact, q2_closed, q_direct, q_recurrence_residual, r_direct, r_integral
from tornheim.polygamma_neg import negapolygamma, negapolygamma_derivative_check, negapolygamma_raw
from tornheim.quadrature import (
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
from tornheim.specfun import bernoulli_poly, hurwitz_zeta, hurwitz_zeta_zderiv, log_gamma

TOL = {
    "t111": 1e-10,
    "t112-integer": 1e-8,
    "t112-u": 1e-9,
    "ex62": 1e-8,
    "sym": 1e-9,
    "thm36": 1e-7,
    "two-int": 1e-7,
    "l1": 1e-12,
    "l2": 1e-9,
    "two-zeta": 1e-10,
    "eval-N": 1e-10,
    "eval-M": 1e-10,
    "q2": 1e-10,
    "recq": 1e-8,
    "rel-rq": 1e-8,
    "ex63": 1e-7,
    "zetaber": 1e-9,
    "lerch": 1e-9,
    "balanced": 1e-9,
    "ladder": 1e-8,
    "prop31-int": 1e-9,
    "prop31-real": 1e-8,
    "huard": 1e-10,
    "mzv": 1e-10,
}


def z(s):
    return mpmath.zeta(s)


def record(number, title, rows):
    """rows: (label, residual, tolerance).  Records one line and asserts all rows."""
    failing = [(lbl, r, t) for lbl, r, t in rows if not abs(r) <= t]
    worst = max(rows, key=lambda row: abs(row[1]) / row[2] if row[2] else 0)
    status = "PASS" if not failing else "FAIL"
    line = (f"{status} criterion {number:>2}: {title} "
            f"[{len(rows)} checks, worst {worst[0]} residual {float(abs(worst[1])):.2e} <= {worst[2]:.0e}]")
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert not failing, failing


def res(a, b):
    a = a.value if hasattr(a, "value") else a
    b = b.value if hasattr(b, "value") else b
    return abs(mpf(a) - mpf(b))


def test_criterion_01_T111():
    record(1, "T(1,1,1) direct sum vs 2 zeta(3)",
           [("T111", res(tornheim_direct(1, 1, 1), 2 * z(3)), TOL["t111"])])


def test_criterion_02_T112():
    u = integral_U(1, 2)
    u_closed = -mp.pi ** 2 / 240 - mpmath.log(2) * z(3) / (4 * mp.pi ** 2)
    via_u = -4 * mp.pi ** 2 * u.value - z(3) * mpmath.log(2) - mp.pi ** 4 / 90
    record(2, "T(1,1,2) parity assembly and the U_{1,2} identity", [
        ("integer-vs-zeta4/2", res(tornheim_integer(1, 1, 2), z(4) / 2), TOL["t112-integer"]),
        ("U12-quad-vs-closed", res(u, u_closed), TOL["t112-u"]),
        ("U-identity-vs-zeta4/2", res(via_u, z(4) / 2), TOL["t112-u"]),
    ])


def test_criterion_03_weight_5_7_9_examples():
    pi = mp.pi
    closed = {
        (2, 1, 2): pi ** 2 * z(3) / 6 - 3 * z(5) / 2,
        (2, 3, 2): -pi ** 2 * z(5) / 6 + 2 * z(7),
        (4, 3, 2): pi ** 4 * z(5) / 90 + pi ** 2 * z(7) / 6 - 5 * z(9) / 2,
    }
    rows = []
    for t, v in closed.items():
        rows.append((f"T{t}-direct", res(tornheim_direct(*t), v), TOL["ex62"]))
        rows.append((f"T{t}-integer", res(tornheim_integer(*t), v), TOL["ex62"]))
    record(3, "closed forms of T(2,1,2), T(2,3,2), T(4,3,2)", rows)


def test_criterion_04_symmetric():
    routes = {
        "sym-even": symmetric_even_zeta(1),
        "sym-even-2": symmetric_even_bernoulli(1),
        "integer": tornheim_integer(2, 2, 2),
        "direct": tornheim_direct(2, 2, 2),
    }
    rows = [(f"T222 {a} vs {b}", res(routes[a], routes[b]), TOL["sym"])
            for a, b in itertools.combinations(routes, 2)]
    rows.append(("T333 sym-odd vs direct", res(symmetric_odd(1), tornheim_direct(3, 3, 3)), TOL["sym"]))
    record(4, "T(2,2,2) four routes pairwise, T(3,3,3)", rows)


def test_criterion_05_explicit_formula():
    rows = []
    for t in [("1.5", "1.5", "1.5"), ("2.5", "1.5", "2.5"), ("1.5", "2.5", "3.5")]:
        t = tuple(map(mpf, t))
        rows.append((f"{tuple(map(float, t))}", res(tornheim_analytic(*t), tornheim_direct(*t)), TOL["thm36"]))
    record(5, "explicit integral formula vs direct at non-integer triples", rows)


def test_criterion_06_two_integer():
    rows = []
    for n1, n2 in [(2, 2), (2, 1), (1, 1)]:
        c = mpf("2.5")
        rows.append((f"({n1},{n2},2.5)", res(tornheim_two_int(n1, n2, c), tornheim_direct(n1, n2, c)),
                     TOL["two-int"]))
    record(6, "two-integer limit formula vs direct", rows)


def test_criterion_07_integral_closed_forms():
    m = loggamma_moments_check()
    rows = [("l1", m.L1_residual, TOL["l1"]), ("l2", m.L2_residual, TOL["l2"])]
    for a, b in [(mpf(2), mpf(2)), (mpf("2.5"), mpf("3.5"))]:
        for refl in (False, True):
            rows.append((f"two-zeta{'-refl' if refl else ''}({a},{b})",
                         res(two_zeta_integral(a, b, refl), two_zeta_integral_quad(a, b, refl)),
                         TOL["two-zeta"]))
    for i, j in itertools.product(range(1, 4), repeat=2):
        rows.append((f"N{i}{j}", res(integral_N(i, j), integral_N_quad(i, j)), TOL["eval-N"]))
        rows.append((f"M{i}{j}", res(integral_M(i, j), integral_M_quad(i, j)), TOL["eval-M"]))
        rows.append((f"M*{i}{j}", res(integral_Mstar(i, j), integral_Mstar_quad(i, j)), TOL["eval-M"]))
    for t in [(2, 2, 1), (1, 1, 1), (2, 2, 3)]:
        rows.append((f"Q2{t}", res(q2_closed(*t), q_direct(2, *t)), TOL["q2"]))
    record(7, "integral closed forms vs quadrature", rows)


def test_criterion_08_q_machinery():
    rows = [("Q1(1,1,2)=1/180", 0 if q1_exact(1, 1, 2) == Fraction(1, 180) else 1, 0)]
    for j in (3, 4, 5, 6):
        for t in [(2, 2, 2), (2, 3, 1)]:
            rows.append((f"recq{j}{t}", q_recurrence_residual(j, *t), TOL["recq"]))
    for j in range(1, 7):
        for t in [(1, 1, 2), (2, 2, 1)]:
            rows.append((f"rel-RQ{j}{t}", res(r_integral(j, *t), r_direct(j, *t)), TOL["rel-rq"]))
    record(8, "Q1 exact, Q recurrences, R from Q vs definition", rows)


def test_criterion_09_weight_table():
    rows = [(c.label, c.residual, TOL["ex63"]) for c in weight_table_check()]
    record(9, "weight 3/4/5 identities with quadrature K, K*, Z, Z*, U", rows)


def test_criterion_10_property_suites():
    rows = []
    for k, q in itertools.product(range(1, 9), ("0.1", "0.3", "0.7", "1.0")):
        q = mpf(q)
        rows.append((f"zetaber k={k} q={q}", res(hurwitz_zeta(1 - k, q), -bernoulli_poly(k, q) / k),
                     TOL["zetaber"]))
    for q in ("0.1", "0.25", "0.5", "0.75", "1.0"):
        q = mpf(q)
        rows.append((f"lerch q={q}", res(hurwitz_zeta_zderiv(0, q),
                                         log_gamma(q).value - mpmath.log(2 * mp.pi) / 2), TOL["lerch"]))
    for m_ in range(2, 9):
        rows.append((f"balanced int psi^(-{m_})",
                     abs(integrate_01(lambda q: negapolygamma_raw(m_, q)).value), TOL["balanced"]))
        e = mpf("1e-15")
        rows.append((f"balanced ends psi^(-{m_})",
                     res(negapolygamma(m_, e), negapolygamma(m_, 1 - e)), TOL["balanced"]))
    for m_ in range(2, 7):
        rows.append((f"ladder m={m_}", negapolygamma_derivative_check(m_, mpf("0.3")), TOL["ladder"]))
    for t, tol in [((2, 2, 2), TOL["prop31-int"]), ((1, 3, 2), TOL["prop31-int"]),
                   ((mpf("1.5"), mpf("1.5"), mpf("2.5")), TOL["prop31-real"])]:
        r = prop31_check(*t)
        rows.append((f"prop31-sym{tuple(map(float, t))}", r.sym_residual, tol))
        rows.append((f"prop31-nsym{tuple(map(float, t))}", r.nsym_residual, tol))
    for n in (5, 7):
        for a, b in itertools.product(range(n), repeat=2):
            c = n - a - b
            if c < 1 or a + b == 0 or not ParamTriple(a, b, c).converges():
                continue
            rows.append((f"huard({a},{b},{c})", res(tornheim_huard(a, b, c), tornheim_direct(a, b, c)),
                         TOL["huard"]))
    for a, c in [(2, 3), (2, 2)]:
        rows.append((f"mzv({a},{c})", mzv_check(a, c), TOL["mzv"]))
    record(10, "property suites (zetaber, Lerch, negapolygamma, Prop 3.1, Huard, mzv)", rows)
