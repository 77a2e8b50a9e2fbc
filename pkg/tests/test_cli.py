import json

import pytest

from powersum import cli, golden
from powersum.closedform import PowerSumFormula
from powersum.genfun import GenFun
from powersum.genmatrix import build_inv_matrix, matrix_from_json


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_formula_text(capsys):
    assert run(capsys, "formula", "4") == (0, "n^5/5 + n^4/2 + n^3/3 - n/30\n", "")
    assert run(capsys, "formula", "0")[1] == "n\n"
    assert run(capsys, "formula", "1")[1] == "n^2/2 + n/2\n"


def test_formula_latex_example_12(capsys):
    code, out, _ = run(capsys, "formula", "12", "--format", "latex")
    assert code == 0
    assert out.strip() == (
        r"\frac{n^{13}}{13} + \frac{n^{12}}{2} + n^{11} - \frac{11n^{9}}{6}"
        r" + \frac{22n^{7}}{7} - \frac{33n^{5}}{10} + \frac{5n^{3}}{3} - \frac{691n}{2730}"
    )


def test_formula_json(capsys):
    code, out, _ = run(capsys, "formula", "12", "--format", "json")
    obj = json.loads(out)
    f = PowerSumFormula.from_json(obj)
    assert {d: c for d, c in enumerate(f.polynomial) if c} == golden.SUM_12_TERMS
    zero = json.loads(run(capsys, "formula", "0", "--format", "json")[1])
    assert zero == {"power": 0, "coefficients": [{"degree": 1, "num": "1", "den": "1"}]}


def test_eval(capsys):
    assert run(capsys, "eval", "4", "3")[:2] == (0, "98\n")
    assert run(capsys, "eval", "1", "1000000")[1] == "500000500000\n"
    assert run(capsys, "eval", "12", "2")[1] == "4097\n"
    assert run(capsys, "eval", "0", "17")[1] == "17\n"


def test_eval_verify(capsys):
    assert run(capsys, "eval", "4", "3", "--verify")[:2] == (0, "98\nverify: match\n")
    code, out, _ = run(capsys, "eval", "2", str(10**7), "--verify", "--format", "json")
    assert code == 0 and json.loads(out)["verify"] == "skipped"


def test_eval_verify_mismatch_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "naive_power_sum", lambda t, n: -1)
    code, out, _ = run(capsys, "eval", "4", "3", "--verify")
    assert code == 3
    assert "mismatch" in out


def test_eval_negative_n_is_usage_error(capsys):
    assert run(capsys, "eval", "2", "-1")[0] == 1


def test_matrix(capsys):
    code, out, _ = run(capsys, "matrix", "4")
    assert code == 0
    rows = [[int(x) for x in line.strip("[]").split()] for line in out.splitlines()]
    assert rows == golden.PERM_MATRICES[4]
    out = run(capsys, "matrix", "4", "--inverse")[1]
    rows = [[int(x) for x in line.strip("[]").split()] for line in out.splitlines()]
    assert rows == golden.INV_MATRIX_4
    assert run(capsys, "matrix", "1")[1] == "[1]\n"


def test_matrix_json(capsys):
    obj = json.loads(run(capsys, "matrix", "12", "--inverse", "--format", "json")[1])
    assert obj["kind"] == "inv" and obj["order"] == 12
    assert obj["columns"][-1] == ["1"]
    assert matrix_from_json(obj) == build_inv_matrix(12)


def test_matrix_latex(capsys):
    out = run(capsys, "matrix", "2", "--format", "latex")[1]
    assert out == "\\begin{pmatrix}\n0 & 1 \\\\\n1 & 1\n\\end{pmatrix}\n"


def test_matrix_cap(capsys, monkeypatch):
    code, _, err = run(capsys, "matrix", "11", "--max-order-cap", "10")
    assert code == 2 and "--max-order-cap" in err
    monkeypatch.setenv("POWERSUM_MAX_ORDER_CAP", "5")
    assert run(capsys, "formula", "6")[0] == 2
    assert run(capsys, "formula", "6", "--max-order-cap", "6")[0] == 0


def test_genfun(capsys):
    out = run(capsys, "genfun", "4")[1].splitlines()
    assert out == [
        "G{k^4} = x(1+11x+11x^2+x^3)/(1-x)^5",
        "G{S_4} = x(1+11x+11x^2+x^3)/(1-x)^6",
    ]
    assert run(capsys, "genfun", "1")[1].splitlines()[0].endswith("= x/(1-x)^2")
    obj = json.loads(run(capsys, "genfun", "12", "--format", "json")[1])
    assert GenFun.from_json(obj["terms"]).numerator == golden.NUMERATOR_12
    assert obj["prefix_sum"]["pole_order"] == 14
    assert run(capsys, "genfun", "0")[0] == 1


def test_bench(capsys):
    code, out, _ = run(capsys, "bench", "1", "10", "--repeats", "1")
    assert code == 0
    reports = json.loads(out)
    assert [r["method"] for r in reports] == list(cli.METHODS)
    assert all(r["digest"] == {"head": "55", "tail": "55", "digits": 2} for r in reports)
    assert all(r["timing"]["median_ns"] >= 0 for r in reports)


def test_bench_validation(capsys):
    assert run(capsys, "bench", "1", "10", "--repeats", "0")[0] == 1
    assert run(capsys, "bench", "1", "10", "--methods", "abacus")[0] == 1


def test_bench_disagreement_exits_3(capsys, monkeypatch):
    monkeypatch.setattr(cli, "naive_power_sum", lambda t, n: 0)
    code, out, _ = run(capsys, "bench", "2", "5", "--repeats", "1")
    assert code == 3


def test_digest():
    assert cli.digest(12345678901234567890) == {"head": "12345678", "tail": "34567890", "digits": 20}


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--max-power", "1")
    assert code == 0
    assert out.splitlines()[-1] == "selftest max-power=1: 13 passed, 0 failed"
    assert run(capsys, "selftest", "--max-power", "0")[0] == 1


def test_selftest_reports_failures(capsys, monkeypatch):
    def broken(max_power):
        raise AssertionError("boom")

    monkeypatch.setattr("powersum.selftest.SUITES", [("broken", broken)])
    code, out, _ = run(capsys, "selftest", "--max-power", "2")
    assert code == 3
    assert "FAIL broken: boom" in out


@pytest.mark.parametrize("argv", [[], ["formula"], ["formula", "x"], ["nope"], ["formula", "2", "--format", "xml"]])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.run(argv)
    assert exc.value.code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["formula", "7", "--format", "json"],
        ["eval", "5", "12345", "--format", "json"],
        ["matrix", "6", "--format", "json"],
        ["matrix", "6", "--inverse", "--format", "json"],
        ["genfun", "6", "--format", "json"],
        ["bench", "3", "20", "--repeats", "1"],
    ],
)
def test_json_round_trips(capsys, argv):
    out = run(capsys, *argv)[1]
    assert cli.dump_json(json.loads(out)) + "\n" == out
