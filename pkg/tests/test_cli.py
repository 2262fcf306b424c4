import json
import os
import subprocess
import sys

import mpmath
import pytest

from tornheim.cli import main, parse_weight_range, ConfigError


def run(*args, env=None):
    """Invoke the installed module the way a user would."""
    full_env = {k: v for k, v in os.environ.items() if k != "TORNHEIM_PREC"}
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "tornheim", *args], capture_output=True,
                          text=True, env=full_env, timeout=300)


def value_line(stdout):
    return mpmath.mpf(stdout.splitlines()[0].split("=")[1])


def test_eval_integer_route():
    p = run("eval", "1", "1", "2", "--method", "integer")
    assert p.returncode == 0
    assert abs(value_line(p.stdout) - mpmath.zeta(4) / 2) < 1e-8
    assert "method: parity-assembly" in p.stdout


def test_eval_c_zero():
    p = run("eval", "2", "3", "0")
    assert p.returncode == 0
    assert abs(value_line(p.stdout) - mpmath.zeta(2) * mpmath.zeta(3)) < 1e-25


def test_eval_analytic_matches_direct(capsys):
    assert main(["eval", "1.5", "1.5", "1.5", "--method", "analytic"]) == 0
    a = value_line(capsys.readouterr().out)
    assert main(["eval", "1.5", "1.5", "1.5", "--method", "direct"]) == 0
    d = value_line(capsys.readouterr().out)
    assert abs(a - d) < 1e-8


@pytest.mark.parametrize("args, needle", [
    (["eval", "0.5", "0.5", "0.5"], "diverges"),
    (["eval", "2", "1", "3", "--method", "huard"], "not covered"),
    (["eval", "2", "2", "2", "--method", "analytic"], "analytic route"),
    (["eval", "1.5", "1", "2", "--method", "integer"], "positive integers"),
])
def test_eval_domain_errors_exit_2(args, needle, capsys):
    assert main(args) == 2
    err = capsys.readouterr().err.strip()
    assert needle in err and len(err.splitlines()) == 1


def test_eval_subprocess_exit_code():
    p = run("eval", "0.5", "0.5", "0.5")
    assert p.returncode == 2
    assert "a+c > 1" in p.stderr


def test_prec_env_overrides_flag():
    p = run("eval", "1", "1", "1", "--prec", "20", env={"TORNHEIM_PREC": "50"})
    assert p.returncode == 0
    digits = p.stdout.splitlines()[0].split("=")[1].strip()
    assert len(digits.replace(".", "")) >= 45


def test_bad_env_precision_exit_2():
    p = run("eval", "1", "1", "1", env={"TORNHEIM_PREC": "abc"})
    assert p.returncode == 2
    assert "TORNHEIM_PREC" in p.stderr


def test_prec_flag(capsys):
    assert main(["eval", "1", "1", "1", "--prec", "40"]) == 0
    out = capsys.readouterr().out
    assert abs(value_line(out) - 2 * mpmath.zeta(3)) < mpmath.mpf(10) ** -35


def test_verify_suite_tornheim_writes_report(tmp_path):
    out = tmp_path / "r.json"
    p = run("verify", "--suite", "tornheim", "--out", str(out))
    assert p.returncode == 0, p.stdout[-2000:]
    doc = json.loads(out.read_text())
    assert set(doc) == {"header", "entries"}
    assert doc["header"]["precision_dps"] == 30
    entries = {e["check_id"]: e for e in doc["entries"]}
    assert entries["thm-zagr-case5-T112"]["status"] == "pass"
    for e in doc["entries"]:
        assert set(e) == {"check_id", "lhs", "rhs", "residual", "tolerance", "status", "notes"}
    assert "thm-zagr-case5-T112" in p.stdout


def test_verify_integrals_json_stdout(capsys):
    assert main(["verify", "--suite", "integrals", "--format", "json", "--out", ""]) == 0
    doc = json.loads(capsys.readouterr().out)
    e = {x["check_id"]: x for x in doc["entries"]}["eval-N-closed-vs-quad-1-2"]
    assert e["status"] == "pass"


def test_verify_tol_override_keeps_check_set(capsys):
    main(["verify", "--suite", "bernoulli", "--format", "json", "--out", ""])
    base = json.loads(capsys.readouterr().out)
    main(["verify", "--suite", "bernoulli", "--format", "json", "--out", "", "--tol", "1e-6"])
    loose = json.loads(capsys.readouterr().out)
    assert [e["check_id"] for e in base["entries"]] == [e["check_id"] for e in loose["entries"]]
    assert all(e["tolerance"] == 1e-6 for e in loose["entries"])


def test_verify_is_deterministic(capsys):
    docs = []
    for _ in range(2):
        main(["verify", "--suite", "negapoly", "--format", "json", "--out", ""])
        docs.append(json.loads(capsys.readouterr().out))
    key = lambda d: [(e["check_id"], e["status"]) for e in d["entries"]]  # noqa: E731
    assert key(docs[0]) == key(docs[1])


def test_verify_failure_exit_1(capsys):
    # a tolerance no quadrature can meet
    assert main(["verify", "--suite", "negapoly", "--tol", "1e-40", "--out", ""]) == 1


@pytest.mark.parametrize("args", [
    ["verify", "--suite", "nope"],
    ["verify", "--tol", "-1"],
    ["verify", "--format", "xml"],
    ["verify", "--prec", "0"],
])
def test_verify_configuration_errors(args):
    with pytest.raises(SystemExit) as info:
        main(args)
    assert info.value.code == 2


def test_verify_low_precision_is_configuration_error():
    assert main(["verify", "--prec", "8", "--out", ""]) == 2


def test_table_weight_three(capsys):
    assert main(["table", "--weight", "3"]) == 0
    rows = [r for r in capsys.readouterr().out.splitlines()[1:] if r.strip()]
    assert len(rows) == 1 and rows[0].startswith("(1,1,1)")
    assert abs(mpmath.mpf(rows[0].split()[1]) - 2 * mpmath.zeta(3)) < 1e-25


def test_table_weight_six_symmetric_row(capsys):
    assert main(["table", "--weight", "6", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    row = next(r for r in doc["rows"] if r["triple"] == [2, 2, 2])
    assert {"symmetric-even", "symmetric-even-bernoulli", "parity-assembly"} <= set(row["routes"])
    assert row["max_route_spread"] < 1e-9


def test_table_weight_five_matches_examples(capsys):
    assert main(["table", "--weight", "5", "--format", "json"]) == 0
    rows = {tuple(r["triple"]): mpmath.mpf(r["value"]) for r in json.loads(capsys.readouterr().out)["rows"]}
    z = mpmath.zeta
    assert abs(rows[(2, 1, 2)] - (mpmath.pi ** 2 * z(3) / 6 - 3 * z(5) / 2)) < 1e-25
    assert len(rows) == 6


@pytest.mark.parametrize("bad", ["2", "7-5", "3-99", "x", "1-2-3"])
def test_table_invalid_range(bad):
    assert main(["table", "--weight", bad]) == 2
    with pytest.raises(ConfigError):
        parse_weight_range(bad)


def test_parse_weight_range():
    assert parse_weight_range("5") == (5, 5)
    assert parse_weight_range("3-7") == (3, 7)
