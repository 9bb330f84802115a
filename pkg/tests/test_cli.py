import json
import subprocess
import sys

import pytest

from seqid.cli import decimal_digits, main


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def strip_ws(s):
    return "".join(s.split())


@pytest.mark.parametrize(
    "argv, expected",
    [
        (["term", "--n", "5"], "29"),
        (["term", "--n", "3", "--companion"], "14"),
        (["term", "--s", "1", "--n", "10"], "55"),
        (["term", "--n", "10", "--method", "matrix"], "2378"),
        (["term", "--n", "7", "--method", "naive"], "169"),
    ],
)
def test_term(capsys, argv, expected):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and out.strip() == expected


def test_term_prints_huge_values(capsys):
    code, out, _ = run(capsys, "term", "--n", "20000")
    assert code == 0 and len(out.strip()) > 4300


@pytest.mark.parametrize(
    "argv",
    [
        ["term", "--n", "-1"],
        ["term", "--s", "0", "--n", "3"],
        ["term", "--n", "0", "--method", "matrix"],
        ["term"],
        ["identity", "--family", "melham", "--m", "1", "--general"],
        ["identity", "--family", "odd-multiple", "--m", "1", "--cleared"],
        ["identity", "--family", "odd-multiple", "--m", "-2"],
        ["identity", "--family", "melham", "--m", "1", "--parity", "odd"],
        ["identity", "--family", "bogus", "--m", "1"],
        ["verify", "--suite", "odd-multiple", "--m-max", "-1"],
        ["verify", "--suite", "nope"],
        ["verify", "--s-max", "0"],
        ["bench", "--n", "0"],
        ["bench", "--n", "10", "--methods", "fast,quantum"],
    ],
)
def test_usage_errors_exit_2_with_empty_stdout(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert err


def test_identity_plain(capsys):
    _, out, _ = run(capsys, "identity", "--family", "odd-multiple", "--m", "1")
    assert out.strip() == "P(3n) = 8*X^3 - 3*X where X = P(n), n odd"
    _, out, _ = run(capsys, "identity", "--family", "odd-multiple", "--m", "3", "--parity", "odd")
    assert "512*X^7 - 448*X^5 + 112*X^3 - 7*X" in out
    _, out, _ = run(capsys, "identity", "--family", "odd-multiple", "--m", "1", "--general", "--parity", "even")
    assert "(s^2+4)*X^3 + 3*X" in out
    _, out, _ = run(capsys, "identity", "--family", "melham", "--m", "1", "--cleared")
    assert out.startswith("Q1*Q3*S = 2*X^3 - 6*X + 4")
    assert "S = sum_{k=1}^{n} P(2k)^3, X = P(2n+1)" in out


def test_identity_latex_matches_reference_displays(capsys):
    cases = [
        (["--family", "odd-multiple", "--m", "3"], r"P_{7n}= 512{P_n}^7-448{P_n}^5+112{P_n}^3-7P_n"),
        (["--family", "odd-multiple", "--m", "1", "--general", "--parity", "even"], r"A_{3n} = (s^2 + 4) {A_n}^{3} + 3 A_n"),
        (["--family", "melham", "--m", "1", "--cleared"], r"Q_1Q_3 \sum_{k=1}^n P_{2k}^3 =2 P_{2n+1} ^3 - 6 P_{2n+1} +4"),
        (["--family", "melham", "--m", "2", "--cleared"],
         r"Q_1Q_3 Q_5 \sum_{k=1}^n P_{2k}^5 = 28 P_{2n+1} ^5 - 120 P_{2n+1}^ 3 + 220 P_{2n+1} -128"),
    ]
    for argv, reference in cases:
        code, out, _ = run(capsys, "identity", *argv, "--format", "latex")
        assert code == 0
        assert strip_ws(out) == strip_ws(reference).replace("{A_n}^{3}", "{A_n}^3")


def test_power_reduction_output(capsys):
    _, out, _ = run(capsys, "identity", "--family", "power-reduction", "--m", "2")
    assert out.strip() == "P(n)^5 = 1/64*(P(5n) + 5*(-1)^(n+1)*P(3n) + 10*P(n))"
    _, out, _ = run(capsys, "identity", "--family", "power-reduction", "--m", "1", "--parity", "even")
    assert out.strip() == "P(n)^3 = 1/8*(P(3n) - 3*P(n)) where n even"
    _, out, _ = run(capsys, "identity", "--family", "power-reduction", "--m", "2", "--format", "json")
    d = json.loads(out)
    assert d["sign_exponent"] == "j(n+1)" and d["denominator"] == "64"
    assert [(c["degree"], c["value"]) for c in d["coefficients"]] == [(5, "1"), (3, "5"), (1, "10")]


@pytest.mark.parametrize(
    "argv",
    [
        ["--family", "odd-multiple", "--m", "4"],
        ["--family", "odd-multiple", "--m", "3", "--general", "--parity", "even"],
        ["--family", "melham", "--m", "2"],
        ["--family", "melham", "--m", "3", "--cleared"],
        ["--family", "power-reduction", "--m", "3", "--parity", "odd"],
    ],
)
def test_json_round_trip(capsys, argv):
    code, out, _ = run(capsys, "identity", *argv, "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert json.dumps(obj, indent=2) + "\n" == out
    assert {"kind", "m", "variable", "parity", "coefficients", "multiplier", "denominator"} <= set(obj)
    assert all(isinstance(c["value"], str) and c["value"] != "0" for c in obj["coefficients"])


def test_json_melham_values(capsys):
    _, out, _ = run(capsys, "identity", "--family", "melham", "--m", "2", "--cleared", "--format", "json")
    d = json.loads(out)
    assert d["multiplier"] == "2296" and d["denominator"] is None
    assert {c["degree"]: c["value"] for c in d["coefficients"]} == {0: "-128", 1: "220", 3: "-120", 5: "28"}
    _, out, _ = run(capsys, "identity", "--family", "melham", "--m", "1", "--format", "json")
    d = json.loads(out)
    assert d["denominator"] == "14" and d["multiplier"] is None


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "melham", "--m-max", "2", "--n-max", "10")
    assert code == 0 and out.startswith("[PASS] melham")
    code, out, _ = run(capsys, "verify", "--suite", "power-reduction", "--m-max", "2", "--n-max", "3", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["status"] == "pass"
    assert any("14/64" in n for n in reports[0]["notes"])


def test_verify_failure_exit_1(capsys, monkeypatch):
    from seqid import cli, identities, verifier
    from seqid.polynomials import Poly

    def broken(m):
        ident = identities.melham_sum_poly(m)
        return type(ident)(m, ident.rational_poly + Poly([1]), ident.cleared_poly, ident.multiplier)

    monkeypatch.setattr(
        cli.verifier, "run_suite", lambda suite, m, n, s: [verifier.verify_melham(m, n, factory=broken)]
    )
    code, out, _ = run(capsys, "verify", "--suite", "melham", "--m-max", "1", "--n-max", "3")
    assert code == 1 and out.startswith("[FAIL] melham")


@pytest.mark.parametrize("methods", ["fast,naive,matrix", None])
def test_bench_agrees(capsys, methods):
    argv = ["bench", "--n", "20", "--format", "json"]
    if methods:
        argv += ["--methods", methods]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    d = json.loads(out)
    assert d["agree"] is True
    assert {r["method"] for r in d["results"]} == {"fast", "naive", "matrix"}
    assert {r["digits"] for r in d["results"]} == {8}  # P_20 = 15994428


def test_bench_detects_disagreement(capsys, monkeypatch):
    from seqid import cli

    monkeypatch.setitem(cli.METHODS, "naive", lambda spec, n: 0)
    code, out, _ = run(capsys, "bench", "--n", "50", "--methods", "fast,naive")
    assert code == 1 and "DISAGREE" in out


@pytest.mark.parametrize("x", [0, 1, 9, 10, 99, 100, 10**50 - 1, 10**50, -(10**7), 3**1000])
def test_decimal_digits(x):
    assert decimal_digits(x) == len(str(abs(x)))


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "seqid", "term", "--n", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "29"
