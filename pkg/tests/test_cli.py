import json

import pytest

from charfib.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_kappa_euler_cube(capsys):
    code, out = run_cli(capsys, "kappa", "--preset", "s-even",
                        "--class", "e^3")
    assert code == 0
    assert "6*e^2-8*a" in out


def test_json_shape_and_byte_stability(capsys):
    code, out1 = run_cli(capsys, "kappa", "--preset", "s-even",
                         "--class", "e^3", "--format", "json")
    assert code == 0
    code, out2 = run_cli(capsys, "kappa", "--preset", "s-even",
                         "--class", "e^3", "--format", "json")
    assert out1 == out2
    rep = json.loads(out1)
    assert set(rep) == {"setup_hash", "command", "results", "hilbert",
                        "timing_ms"}
    assert rep["timing_ms"] == 0
    assert rep["results"][0]["check"] == "pass"
    assert all(set(r) == {"name", "degree", "expression", "check"}
               for r in rep["results"])


def test_cohomology_degree_zero(capsys):
    code, out = run_cli(capsys, "cohomology", "--preset", "s-odd",
                        "--max-degree", "0", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["hilbert"] == [1]


def test_unknown_class_is_input_error(capsys):
    code, _ = run_cli(capsys, "kappa", "--preset", "s-even",
                      "--class", "nope")
    assert code == 2


def test_missing_setup_is_input_error(capsys):
    code, _ = run_cli(capsys, "model")
    assert code == 2
    code, _ = run_cli(capsys, "model", "--setup", "/nonexistent/file.k")
    assert code == 2


def test_check_suite_passes(capsys):
    code, out = run_cli(capsys, "check", "even-sphere", "--n", "1",
                        "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert all(r["check"] in ("pass", "n/a") for r in rep["results"])
    # the out-of-scale disclosure row is present and marked n/a
    assert any(r["check"] == "n/a" for r in rep["results"])


def test_check_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["check", "not-a-suite"])
    assert exc.value.code == 2


def test_taut_ring_human_output(capsys):
    code, out = run_cli(capsys, "taut-ring", "--preset", "s-even",
                        "--cutoff", "12")
    assert code == 0
    assert "generator" in out and "hilbert:" in out


def test_kahler_command(capsys):
    code, out = run_cli(capsys, "kahler", "--m", "3", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert any(r["name"] == "kappa_L1" for r in rep["results"])


def test_cp2_report_command(capsys):
    code, out = run_cli(capsys, "cp2-report", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert all(r["check"] in ("pass", "n/a") for r in rep["results"])
