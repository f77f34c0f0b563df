import io
import json

import pytest

from qcatalan import cli
from qcatalan.suites import Check


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_carlitz_plain():
    code, out, _ = call("carlitz", "--n", "3", "--format", "plain")
    assert code == 0
    assert out.splitlines() == ["C_0 = 1", "C_1 = 1", "C_2 = 1+q", "C_3 = 1+q+2q^2+q^3"]


def test_verify_inversion():
    code, out, _ = call("verify", "--suite", "inversion", "--p", "3", "--order", "8")
    assert code == 0
    assert "[FAIL]" not in out and "[PASS]" in out


def test_dual_coeffs_agree():
    code, out, _ = call("dual-coeffs", "--ptilde", "1+t", "--r1", "4", "--r2", "9", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["checks"] == [{"name": "segner = triangular", "pass": True}]
    assert {"index": [1, 2], "value": "1"} in doc["values"]


def test_json_schema_and_determinism():
    argv = ("verify", "--suite", "structural", "--order", "4", "--seed", "7", "--format", "json")
    first = call(*argv)[1]
    assert first == call(*argv)[1]
    doc = json.loads(first)
    assert set(doc) == {"command", "params", "values", "checks"}
    assert doc["params"]["seed"] == 7
    assert all(set(c) == {"name", "pass"} for c in doc["checks"])


def test_tgen_reports_four_methods():
    code, out, _ = call("tgen", "--phi", "z+z^2", "--p", "3", "--order", "3", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert [v["value"] for v in doc["values"]] == ["1", "1", "(2+q+q^2)/q^2", "(3+2q+4q^2+3q^3+5q^4+2q^5+q^6)/q^6"]
    assert len(doc["checks"]) == 3


def test_latex():
    _, out, _ = call("qfuss", "--p", "3", "--n", "2", "--format", "latex")
    assert out.splitlines()[0] == "\\begin{aligned}"
    assert "C_{3,2} &= 1+q+q^{2}" in out


def test_parse_error_exit():
    code, _, err = call("diamond", "--phi", "z + + z", "--p", "2")
    assert code == 2
    assert "offset 4" in err


def test_invalid_input_exit():
    assert call("tgen", "--phi", "z+t", "--p", "2")[0] == 2
    assert call("qfuss", "--p", "1")[0] == 2


def test_truncation_exit():
    code, _, err = call("dual-coeffs", "--ptilde", "1+t", "--known-z", "3", "--r1", "5")
    assert code == 3
    assert "z^3" in err


def test_failed_check_exit(monkeypatch):
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [Check("x", False)])
    code, out, _ = call("verify", "--suite", "carlitz")
    assert code == 4
    assert "[FAIL] x" in out


def test_env_default_truncation(monkeypatch):
    monkeypatch.setenv("QCAT_DEFAULT_TRUNC", "2")
    assert call("carlitz")[1].splitlines()[-1] == "C_2 = 1+q"
    monkeypatch.setenv("QCAT_DEFAULT_TRUNC", "zero")
    assert call("carlitz")[0] == 2


def test_default_truncation_is_twelve(monkeypatch):
    monkeypatch.delenv("QCAT_DEFAULT_TRUNC", raising=False)
    assert call("carlitz")[1].splitlines()[-1].startswith("C_12 = ")


def test_basis_table():
    code, out, _ = call("basis", "--ptilde", "1", "--k", "2", "--order", "3")
    assert code == 0
    assert out.splitlines() == ["e_0[z^0] = 1", "e_1[z^1] = 1", "e_1[z^2] = -1", "e_2[z^2] = 1", "e_2[z^3] = -1-q"]
