import json
import subprocess
import sys

import pytest

from gradedpi.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def without_duration(report):
    clone = json.loads(json.dumps(report))
    clone["counters"]["duration_ms"] = None
    return clone


class TestCheck:
    def test_standard4_all_hold(self, capsys):
        code, report = run_json(
            capsys, "check", "--builtin", "standard:4", "--n", "2"
        )
        assert code == 0
        assert report["schema"] == "1"
        assert list(report) == [
            "schema", "request", "verdicts", "classification", "counters", "witnesses",
        ]
        assert report["verdicts"]["S0"] == {"holds": True, "tuples_examined": 128}
        assert report["counters"]["naive_total"] == 256
        assert report["witnesses"] == {}

    def test_commutator_s1_violation(self, capsys):
        code, report = run_json(
            capsys,
            "check", "--poly", "x1*x2 - x2*x1", "--n", "2", "--statement", "S1",
        )
        assert code == 1
        assert report["verdicts"]["S1"]["holds"] is False
        assert report["witnesses"]["S1"] == {
            "tuple": "E(1,1) E(1,2)",
            "value": "0,1;0,0",
            "trace": "0",
        }

    def test_not_multilinear_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "check", "--poly", "x1*x1", "--n", "2")
        assert code == 2
        assert "x1*x1" in err

    def test_text_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "check", "--poly", "x1*x2 - x2*x1", "--n", "2", "--statement", "S2"
        )
        assert code == 0
        assert "S2: holds  tuples examined: 8" in out
        assert "result: holds" in out

    def test_s0_runs_over_f2(self, capsys):
        code, report = run_json(
            capsys,
            "check", "--builtin", "jordan-central", "--n", "2",
            "--field", "Fp:2", "--statement", "S0",
        )
        assert code == 1
        assert report["verdicts"]["S0"]["holds"] is False


class TestClassify:
    def test_positional_builtin(self, capsys):
        code, report = run_json(capsys, "classify", "standard:4", "--n", "2")
        assert code == 0
        cls = report["classification"]
        assert cls["verdict"] == "identity"
        assert cls["span_dimension"] == 0
        assert cls["s1_holds"] and cls["s2_holds"]

    def test_positional_poly_text(self, capsys):
        code, report = run_json(capsys, "classify", "x1*x2 - x2*x1", "--n", "3")
        assert code == 0
        assert report["classification"]["verdict"] == "trace-zero-span"
        assert report["classification"]["span_dimension"] == 8

    def test_jordan_fixture(self, capsys):
        code, report = run_json(capsys, "classify", "jordan-central", "--n", "2")
        assert code == 0
        assert report["classification"]["verdict"] == "central"
        assert report["classification"]["span_dimension"] == 1
        assert report["witnesses"]["S2"]["trace"] == "-2"

    def test_mesyan_note_present_when_applicable(self, capsys):
        _, report = run_json(capsys, "classify", "commutator", "--n", "2")
        assert report["classification"]["mesyan_note"]
        _, report = run_json(capsys, "classify", "jordan-central", "--n", "2")
        assert report["classification"]["mesyan_note"] is None

    def test_characteristic_divides_n_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "classify", "jordan-central", "--n", "2", "--field", "Fp:2"
        )
        assert code == 2
        assert "characteristic" in err

    def test_conflicting_sources_exit_2(self, capsys):
        code, _, err = run_cli(
            capsys, "classify", "commutator", "--poly", "x1", "--n", "2"
        )
        assert code == 2
        assert "exactly one polynomial" in err


class TestDeterminism:
    def test_workers_only_change_duration(self, capsys):
        runs = []
        for workers in ("1", "2", "3"):
            _, report = run_json(
                capsys,
                "classify", "jordan-central", "--n", "3", "--workers", workers,
            )
            runs.append(without_duration(report))
        assert runs[0] == runs[1] == runs[2]

    def test_repeat_runs_byte_identical_modulo_duration(self, capsys):
        a = run_json(capsys, "check", "commutator", "--n", "3")[1]
        b = run_json(capsys, "check", "commutator", "--n", "3")[1]
        assert without_duration(a) == without_duration(b)
        assert json.dumps(without_duration(a)) == json.dumps(without_duration(b))


class TestSpan:
    def test_commutator_span(self, capsys):
        code, report = run_json(capsys, "span", "commutator", "--n", "2")
        assert code == 0
        cls = report["classification"]
        assert cls["span_dimension"] == 3
        assert cls["span_basis"] == ["1,0;0,-1", "0,1;0,0", "0,0;1,0"]

    def test_zero_span(self, capsys):
        code, report = run_json(capsys, "span", "zero:2", "--n", "2")
        assert code == 0
        assert report["classification"]["span_basis"] == []


class TestParse:
    def test_canonicalizes(self, capsys):
        code, out, _ = run_cli(capsys, "parse", "--poly", "- x2*x1 + x1*x2")
        assert code == 0
        assert "polynomial: x1*x2 - x2*x1" in out
        assert "arity: 2" in out

    def test_variable_gap_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "parse", "--poly", "x1*x3")
        assert code == 2
        assert "missing x2" in err

    def test_bad_field_exit_2(self, capsys):
        code, _, err = run_cli(capsys, "parse", "--poly", "x1", "--field", "Fp:6")
        assert code == 2
        assert "not prime" in err


class TestBench:
    def test_csv_shape_and_ratio(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--n", "2:3", "--m", "1:3")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "n,m,graded_tuples,naive_tuples,ratio,graded_ms,naive_ms"
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == 6
        for n, m, graded, naive, ratio, *_ in rows:
            n, m, graded, naive, ratio = map(int, (n, m, graded, naive, ratio))
            assert graded == n ** (2 * m - 1)
            assert naive == n ** (2 * m)
            assert ratio == n


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gradedpi", "classify", "standard:4", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "verdict: identity" in proc.stdout


def test_usage_error_exit_2():
    proc = subprocess.run(
        [sys.executable, "-m", "gradedpi", "check", "--n", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
