"""Command-line interface: formats, exit codes, determinism."""

import json

import pytest

from triharmonic import cli


def run(argv):
    try:
        code = cli.main(argv)
    except SystemExit as exc:
        code = exc.code
    return code


def test_exponents_json(capsys):
    assert run(["exponents", "--n", "15"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["schema_version"]
    (row,) = doc["rows"]
    assert row["exponents"]["pc"]["kind"] == "finite"
    assert row["exponents"]["pm"]["kind"] == "infinite"


def test_exponents_range_csv(capsys):
    assert run(["exponents", "--n-range", "7:9", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("n,serrin,sobolev,pc,")
    assert len(lines) == 4
    assert lines[1].split(",")[3] == "inf"  # pc infinite below threshold


def test_exponents_usage_errors(capsys):
    assert run(["exponents", "--n", "5"]) == 64
    assert run(["exponents", "--n-range", "9:8"]) == 64
    assert run(["exponents"]) == 64


def test_coeffs_roundtrip(capsys):
    assert run(["coeffs", "--n", "21", "--k", "1/40"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["coefficients"]["k"] == "1/40"
    assert doc["singular_stability"] in ("stable", "unstable", "boundary")


def test_coeffs_requires_exactly_one_input(capsys):
    assert run(["coeffs", "--n", "21"]) == 64
    assert run(["coeffs", "--n", "21", "--p", "3", "--k", "2"]) == 64
    assert run(["coeffs", "--n", "21", "--p", "0"]) == 64


def test_certify_single_lemma(tmp_path, capsys):
    out = tmp_path / "bundle.json"
    code = run(
        ["certify", "--lemma", "cube-root-rationalization", "--out", str(out)]
    )
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["summary"]["falsified"] == 0
    ids = [c["claim_id"] for c in doc["certificates"]]
    assert ids == ["cube-root-rationalization-identity"]


def test_certify_unknown_lemma(capsys):
    assert run(["certify", "--lemma", "no-such-claim"]) == 64


def test_certify_tamper_hook(tmp_path):
    out = tmp_path / "tampered.json"
    code = run(
        [
            "certify",
            "--lemma",
            "cube-root-rationalization",
            "--tamper",
            "demo",
            "--out",
            str(out),
        ]
    )
    assert code == 1
    doc = json.loads(out.read_text())
    assert doc["summary"]["falsified"] == 1


def test_certify_deterministic_output(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["certify", "--lemma", "quartic-diagonal-factorization"]
    assert run(args + ["--out", str(a)]) == 0
    assert run(args + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_monotonicity_csv_columns(capsys):
    code = run(
        [
            "monotonicity", "--n", "12", "--p", "4",
            "--profile", "gaussian", "--lmode", "1",
            "--lambda-range", "0.9:1.3:2", "--format", "csv",
        ]
    )
    assert code == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "lambda,E,dE_formula,dE_fd"
    assert len(lines) == 3


def test_monotonicity_json_report(capsys):
    code = run(
        [
            "monotonicity", "--n", "12", "--p", "4",
            "--lambda-range", "1.0:1.5:2",
        ]
    )
    assert code == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ratio_floor"] is not None
    for row in doc["rows"]:
        assert row["reading"] == "mixed"


def test_monotonicity_divergent_profile(capsys):
    code = run(
        [
            "monotonicity", "--n", "12", "--p", "4",
            "--profile", "power", "--shape-param", "4.5",
            "--lambda-range", "1.0:1.0:1",
        ]
    )
    assert code == 65


def test_monotonicity_power_needs_exponent(capsys):
    code = run(
        ["monotonicity", "--n", "12", "--p", "4", "--profile", "power"]
    )
    assert code == 64


def test_radial_then_pohozaev(tmp_path, capsys):
    prof = tmp_path / "prof.json"
    code = run(
        [
            "radial", "--n", "15", "--p", "7", "--u0", "1",
            "--rmax", "3", "--out", str(prof),
        ]
    )
    assert code == 0
    doc = json.loads(prof.read_text())
    assert doc["blew_up"] is False
    assert len(doc["grid"]) == len(doc["values"][0])

    code = run(["pohozaev", "--profile-file", str(prof), "--R", "2"])
    assert code == 0
    rep = json.loads(capsys.readouterr().out)
    assert float(rep["residual_rel"]) < 1e-6


def test_pohozaev_r_out_of_range(tmp_path, capsys):
    prof = tmp_path / "prof.json"
    run(["radial", "--n", "15", "--p", "7", "--u0", "1", "--rmax", "2",
         "--out", str(prof)])
    assert run(["pohozaev", "--profile-file", str(prof), "--R", "5"]) == 65


def test_pohozaev_missing_file():
    assert run(["pohozaev", "--profile-file", "/nonexistent.json", "--R", "2"]) == 74


def test_pohozaev_malformed_file(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(["pohozaev", "--profile-file", str(bad), "--R", "2"]) == 65
    nostart = tmp_path / "nostart.json"
    nostart.write_text("{}")
    assert run(["pohozaev", "--profile-file", str(nostart), "--R", "2"]) == 65


def test_unwritable_output_path():
    assert run(["exponents", "--n", "15", "--out", "/no/such/dir/x.json"]) == 74
