import io
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from floorpoly.cli import schemas
from floorpoly.cli.main import run

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("FLOORPOLY_REGEN_GOLDEN") == "1"

# name -> (argv, exit code)
SCENARIOS = {
    "dist_half_x_m2": (["dist", "-P", "x/2", "-m", "2"], 0),
    "dist_two_thirds_x_m2": (["dist", "-P", "2/3*x", "-m", "2"], 0),
    "dist_x_squared_m4_csv": (["dist", "-P", "x^2", "-m", "4", "--csv"], 0),
    "dist_sqrt2_x_m2": (["dist", "-P", "sqrt(2)*x", "-m", "2", "-N", "10000"], 0),
    "udcheck_two_thirds_x_m2": (["udcheck", "-P", "2/3*x", "-m", "2"], 0),
    "udcheck_x_squared_m49": (["udcheck", "-P", "x^2", "-m", "49"], 0),
    "complete_x_squared_m3": (["complete", "-P", "x^2", "-m", "3"], 0),
    "complete_linear_m5": (["complete", "-P", "2/3*x + 1/2", "-m", "5"], 0),
    "classify_x_squared": (["classify", "-P", "x^2"], 0),
    "classify_sqrt2_x_squared": (["classify", "-P", "sqrt(2)*x^2 + 1"], 0),
    "classify_x_squared_low_budget": (["classify", "-P", "x^2", "--budget-anchor", "1"], 2),
    "classify_csv": (["classify", "-P", "x/5 + sqrt(3)", "--csv"], 0),
    "witness_nonud_x_squared": (["witness-nonud", "-P", "x^2"], 0),
    "witness_nonud_x_cubed_plus_x": (["witness-nonud", "-P", "x^3 + x"], 0),
    "witness_incomplete_x_squared": (["witness-incomplete", "-P", "x^2"], 0),
    "witness_incomplete_half_x_squared_even": (
        ["witness-incomplete", "-P", "x^2/2", "--method", "even"],
        0,
    ),
    "witness_incomplete_monomial": (
        ["witness-incomplete", "-P", "3/5*x^4", "--method", "monomial"],
        0,
    ),
    "witness_incomplete_budget": (
        ["witness-incomplete", "-P", "3/5*x^4", "--method", "monomial", "--budget-prime", "50"],
        2,
    ),
    "run_search_2_3": (["run-search", "-n", "2", "-l", "3"], 0),
    "run_search_budget": (["run-search", "-n", "2", "-l", "3", "--budget-prime", "7"], 2),
}

WEYL = {
    "weyl_x_m2": (["weyl", "-P", "x", "-m", "2", "-N", "1000"], 0),
    "weyl_x_squared_m4": (["weyl", "-P", "x^2", "-m", "4", "-N", "10000"], 0),
}


def _run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def _golden(name: str, text: str, suffix: str) -> str:
    path = GOLDEN / f"{name}.{suffix}"
    if REGEN:
        GOLDEN.mkdir(exist_ok=True)
        path.write_text(text)
    return path.read_text()


@pytest.mark.parametrize("name", sorted(SCENARIOS))
def test_golden_bytes(name):
    argv, expected_code = SCENARIOS[name]
    code, out, err = _run(argv)
    assert code == expected_code, err
    csv_mode = "--csv" in argv
    assert out == _golden(name, out, "csv" if csv_mode else "json")
    if not csv_mode:
        jsonschema.validate(json.loads(out), schemas.BY_COMMAND[argv[0]])


@pytest.mark.parametrize("name", sorted(WEYL))
def test_golden_weyl(name):
    # floating-point sums are compared numerically rather than byte for byte
    argv, expected_code = WEYL[name]
    code, out, _ = _run(argv)
    assert code == expected_code
    doc = json.loads(out)
    jsonschema.validate(doc, schemas.WEYL)
    gold = json.loads(_golden(name, out, "json"))
    assert [s["h"] for s in doc["sums"]] == [s["h"] for s in gold["sums"]]
    for a, b in zip(doc["sums"], gold["sums"]):
        assert a["magnitude"] == pytest.approx(b["magnitude"], abs=1e-12)


def test_golden_key_values():
    doc = json.loads(_run(["witness-nonud", "-P", "x^2"])[1])
    assert (doc["p"], doc["modulus"], doc["class"], doc["count"], doc["period"]) == (7, 49, 0, 7, 49)
    doc = json.loads(_run(["udcheck", "-P", "2/3*x", "-m", "2"])[1])
    assert doc["ud"] is False and doc["counts"] == [4, 2]
    doc = json.loads(_run(["witness-incomplete", "-P", "x^2"])[1])
    assert (doc["p"], doc["class"]) == (3, 2)
    doc = json.loads(_run(["run-search", "-n", "2", "-l", "3"])[1])
    assert (doc["p"], doc["t"]) == (11, 6)
    doc = json.loads(_run(["weyl", "-P", "x^2", "-m", "4", "-N", "10000", "--h", "2"])[1])
    assert doc["max_magnitude"] < 1e-12


def test_verify_round_trip(tmp_path):
    code, out, _ = _run(["witness-nonud", "-P", "x^2"])
    cert = tmp_path / "cert.json"
    cert.write_text(out)
    code, out, _ = _run(["verify", str(cert), "-P", "x^2"])
    assert code == 0 and json.loads(out) == {"valid": True, "type": "nonud"}
    jsonschema.validate(json.loads(out), schemas.VERIFY)

    doc = json.loads(cert.read_text())
    doc["class"] = 1
    cert.write_text(json.dumps(doc))
    code, out, _ = _run(["verify", str(cert)])
    assert code == 1 and json.loads(out)["valid"] is False


def test_verify_run_certificate(tmp_path):
    cert = tmp_path / "run.json"
    cert.write_text(_run(["run-search", "-n", "3", "-l", "2"])[1])
    assert _run(["verify", str(cert), "-n", "3", "-l", "2"])[0] == 0
    code, out, _ = _run(["verify", str(cert), "-n", "4"])
    assert code == 1 and "error" in json.loads(out)


def test_verify_malformed_files(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert _run(["verify", str(bad)])[0] == 1
    bad.write_text(json.dumps({"type": "nonud", "p": 7}))
    code, out, _ = _run(["verify", str(bad), "-P", "x^2"])
    assert code == 1 and json.loads(out)["valid"] is False
    assert _run(["verify", str(tmp_path / "missing.json")])[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["bogus"],
        ["dist", "-P", "x"],
        ["dist", "-P", "x", "-m", "1"],
        ["udcheck", "-P", "sqrt(2)*x + sqrt(3)", "-m", "2"],
        ["udcheck", "-P", "sqrt(2)*x", "-m", "2"],
        ["classify", "-P", "5"],
        ["witness-incomplete", "-P", "x^3 + x", "--method", "monomial"],
        ["dist", "-P", "x", "-m", "2", "--frobnicate"],
    ],
)
def test_usage_and_input_errors_exit_1(argv):
    code, out, err = _run(argv)
    assert code == 1 and out == "" and err.startswith("floorpoly:")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "floorpoly", "udcheck", "-P", "2/3*x", "-m", "2"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ud"] is False
