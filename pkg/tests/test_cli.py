"""CLI subcommands exercised through main(argv)."""

import json
import math

import pytest

from zetalab import cli
from zetalab import harness


def run_cli(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_eval_zeta(capsys):
    code, out = run_cli(["eval", "2", "0"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert abs(doc["value_re"] - math.pi**2 / 6.0) < 1e-12
    assert doc["method"] == "direct-series"


def test_eval_other_functions(capsys):
    for fn in ("eta", "nu", "theta", "kappa"):
        code, out = run_cli(["eval", "0.6", "5.0", "--fn", fn], capsys)
        assert code == 0
        assert "value_re" in json.loads(out)


def test_eval_error_is_reported(capsys):
    code, out = run_cli(["eval", "1", "0"], capsys)
    assert code == 1
    assert "error" in json.loads(out)


def test_sieve_stdout(capsys):
    code, out = run_cli(["sieve", "6", "--fn", "mu"], capsys)
    assert code == 0
    assert out.splitlines() == ["n,value", "1,1", "2,-1", "3,-1", "4,0", "5,-1", "6,1"]


def test_sieve_to_file(tmp_path, capsys):
    path = tmp_path / "lambda.csv"
    code, _ = run_cli(["sieve", "8", "--fn", "lambda", "--out", str(path)], capsys)
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "n,value"
    assert lines[8] == "8,-1"  # Omega(8) = 3


def test_verify_single_json(capsys):
    code, out = run_cli(["verify", "--only", "P1_CONJ_RATIO", "--report", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["results"][0]["id"] == "P1_CONJ_RATIO"
    assert doc["results"][0]["verdict"] == "pass"


def test_verify_unknown_id(capsys):
    with pytest.raises(SystemExit):
        cli.main(["verify", "--only", "BOGUS"])


def test_verify_env_seed(monkeypatch, capsys):
    monkeypatch.setenv("ZETALAB_SEED", "42")
    code, out = run_cli(["verify", "--only", "EQ44_MERTENS", "--report", "json"], capsys)
    assert code == 0
    assert json.loads(out)["seed"] == 42


def test_verify_exit_code_on_failure(monkeypatch, capsys):
    body, finding, _ = harness.REGISTRY["EQ44_MERTENS"]
    monkeypatch.setitem(harness.REGISTRY, "EQ44_MERTENS", (body, finding, -1.0))
    code, out = run_cli(["verify", "--only", "EQ44_MERTENS", "--report", "csv"], capsys)
    assert code == 1
    assert ",fail," in out


def test_verify_text_report_to_file(tmp_path, capsys):
    path = tmp_path / "report.txt"
    code, _ = run_cli(
        ["verify", "--only", "SEC4_TRIVIAL_ZEROS", "--report", "text", "--out", str(path)], capsys
    )
    assert code == 0
    assert "SEC4_TRIVIAL_ZEROS" in path.read_text()


def test_scan(capsys):
    code, out = run_cli(
        ["scan", "--rect", "1.9,2.1,0,0.05", "--step", "0.1", "--quantity", "abs_zeta"], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "re,im,value"
    assert len(lines) == 4


def test_scan_bad_rect(capsys):
    with pytest.raises(SystemExit):
        cli.main(["scan", "--rect", "1,2,3", "--step", "0.1", "--quantity", "abs_zeta"])


def test_zeros_csv(capsys):
    code, out = run_cli(["zeros", "--tmin", "14", "--tmax", "14.3", "--step", "0.02"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,re,im,abs_eta,multiplicity,method"
    assert len(lines) == 2
    t = float(lines[1].split(",")[0])
    assert abs(t - 14.134725) < 1e-6
    assert lines[1].split(",")[5] == "winding-confirmed"
