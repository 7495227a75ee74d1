"""Batch driver: subcommands, JSON determinism, exit codes, schema."""

import json
import pathlib
import subprocess
import sys

import pytest

from monodromy_lab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_period(capsys):
    code, out = run_cli(capsys, "period")
    assert code == 0
    doc = json.loads(out)
    assert doc["coefficients"][:6] == [
        1,
        2,
        {"num": 3, "den": 4},
        {"num": 5, "den": 54},
        {"num": 35, "den": 6912},
        {"num": 7, "den": 48000},
    ]


def test_qcoh(capsys):
    code, out = run_cli(capsys, "qcoh")
    assert code == 0
    doc = json.loads(out)
    assert doc["U"] == [[0, 0, 3, 0], [3, 0, 0, 3], [0, 6, 0, 0], [0, 0, 3, 0]]
    assert doc["R"] == [[0, 0, 0, 0], [3, 0, 0, 0], [0, 6, 0, 0], [0, 0, 3, 0]]
    assert doc["eta"][0] == [0, 0, 0, 1]
    # s1*s2 = q + s21
    assert doc["quantum_table"]["1,2"] == {"0": [0, 1, 0], "3": [1, 0, 0]}


def test_phitop_block3(capsys):
    code, out = run_cli(capsys, "phitop", "--order", "10")
    assert code == 0
    doc = json.loads(out)
    z3 = doc["coefficients"][3]
    assert z3 == [
        [2, 0, 0, 1],
        [0, -2, 0, 0],
        [0, 0, -2, 0],
        [0, 0, 0, 2],
    ]


def test_euler_matrix(capsys):
    code, out = run_cli(capsys, "euler-matrix")
    assert code == 0
    doc = json.loads(out)
    assert doc["euler_matrix"] == [[1, 5, 16, 14], [0, 1, 4, 5], [0, 0, 1, 4], [0, 0, 0, 1]]


def test_solutions_identities(capsys):
    code, out = run_cli(capsys, "solutions", "--check-identities", "--order", "30")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["points"]) >= 5
    for entry in doc["points"]:
        assert entry["euler_residual"] <= 1e-9
        assert entry["rotation_residual"] <= 1e-9
    for chk in doc["contour_checks"]:
        assert chk["deviation"] <= 1e-8


def test_gamma(capsys):
    code, out = run_cli(capsys, "gamma")
    assert code == 0
    doc = json.loads(out)
    assert doc["residuals"]["c_gamma_vs_closed_form"] <= 1e-10
    assert doc["chern_characters"]["O1"]["plain"][1] == 1


@pytest.fixture(scope="module")
def verify_output():
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(["verify"])
    return code, buf.getvalue()


def test_verify_passes_and_reports_braid(verify_output):
    code, out = verify_output
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "ok"
    assert doc["failed_checks"] == []
    assert doc["braid"]["word"] == ["b23_inverse"]
    assert doc["braid"]["signs"] == [1, -1, -1, 1]
    assert doc["S"] == [[1, -4, -11, -5], [0, 1, 4, 4], [0, 0, 1, 5], [0, 0, 0, 1]]


def test_verify_schema(verify_output):
    jsonschema = pytest.importorskip("jsonschema")
    _, out = verify_output
    doc = json.loads(out)
    schema_path = pathlib.Path(__file__).resolve().parents[1] / "docs" / "report_schema.json"
    schema = json.loads(schema_path.read_text())
    jsonschema.validate(doc, schema)


def test_verify_deterministic(verify_output, capsys):
    _, first = verify_output
    code, second = run_cli(capsys, "verify")
    assert code == 0
    assert first == second


def test_exit_code_config_errors(capsys):
    assert run_cli(capsys, "stokes", "--z0-stokes", "nonsense")[0] == 2
    assert run_cli(capsys, "verify", "--tol", "braid_match=-1")[0] == 2
    assert run_cli(capsys, "verify", "--order", "5")[0] == 2


def test_exit_code_tolerance_failure(capsys):
    code, out = run_cli(capsys, "connection", "--tol", "c_vs_closed_form=1e-60")
    assert code == 1
    doc = json.loads(out)
    assert "c_vs_closed_form" in doc["failed_checks"]
    assert doc["status"] == "fail"


def test_pretty_and_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, _ = run_cli(capsys, "euler-matrix", "--pretty", "--output", str(target))
    assert code == 0
    text = target.read_text()
    assert "euler_matrix =" in text
    assert '"command": "euler-matrix"' in text


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "monodromy_lab.cli", "period"],
        capture_output=True,
        text=True,
        timeout=120,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["coefficients"][1] == 2
