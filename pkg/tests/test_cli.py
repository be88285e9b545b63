import json
import subprocess
import sys
from fractions import Fraction

import pytest

from abelbelyi.arith import GF, QQ
from abelbelyi.cli import main
from abelbelyi.upoly import UniPoly


def run(capsys, *argv):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr()
    return code, (json.loads(out.out) if out.out.strip() else None), out.err


def test_counts(capsys):
    code, rep, _ = run(capsys, "counts", "--n", "6")
    assert code == 0
    r = rep["results"]
    assert (r["m_hex"], r["m_box"], r["m_hex_primitive"], r["m_box_primitive"]) == ("10/3", "5/2", "3", "1")
    code, rep, _ = run(capsys, "counts", "--n", "6", "--char", "5")
    assert (rep["results"]["m_hex"], rep["results"]["m_box"]) == ("7/3", "3/2")
    assert rep["command"] == "counts" and rep["inputs"] == {"n": 6, "char": 5}


@pytest.mark.parametrize(
    "argv,message",
    [
        (["counts", "--n", "6", "--char", "2"], "characteristic 2,3 excluded"),
        (["counts", "--n", "10", "--char", "5"], "divides"),
        (["counts", "--n", "3"], "n must be > 3"),
        (["kappa6", "--reduce", "3"], "characteristic 2,3 excluded"),
        (["kappa6", "--t", "1"], "cusp"),
        (["pade", "--n", "3", "--curve", "0,-3,2"], "repeated root"),
        (["pade", "--n", "3", "--curve", "1,2"], "a,b,c"),
        (["genus", "--n", "4"], "n must be >= 5"),
    ],
)
def test_validation_exit_code(capsys, argv, message):
    code, rep, err = run(capsys, *argv)
    assert code == 2 and rep is None
    assert message in err


def test_enumerate(capsys):
    code, rep, _ = run(capsys, "enumerate", "--n", "6", "--shape", "hex")
    assert code == 0
    rows = rep["results"]["classes"]
    assert len(rows) == 4
    assert {tuple(r["parts"]): r["aut_order"] for r in rows}[(2, 2, 2)] == 3
    code, rep, _ = run(capsys, "enumerate", "--n", "6", "--shape", "box", "--primitive")
    assert [r["class"] for r in rep["results"]["classes"]] == ["B<1,1,2,2>"]


def test_total_and_cusps_and_genus(capsys):
    _, rep, _ = run(capsys, "total", "--n", "5", "--oracle")
    assert rep["results"] == {"total": "24/5", "oracle": "24/5", "agree": True}
    _, rep, _ = run(capsys, "cusps", "--n", "6", "--char", "5")
    types = {(c["type"], c["k"]): c["kind"] for c in rep["results"]["cusps"]}
    assert types[("iv", 5)] == "value-one"
    assert rep["results"]["deg_kappa"] == "7"
    _, rep, _ = run(capsys, "genus", "--n", "11")
    assert rep["results"]["genus"] == 1


def test_kappa6(capsys):
    _, rep, _ = run(capsys, "kappa6", "--reduce", "5")
    r = rep["results"]
    assert r["field"] == "Fp:5"
    assert r["kappa_factored"] == "4*(t + 1)*(t^2 + 3*t + 4)^3 / (t + 4)^4"
    _, rep, _ = run(capsys, "kappa6", "--t", "2")
    assert rep["results"]["agree"] and rep["results"]["kappa_resultant"] == str(Fraction(-17 * 49 * 713**3, 2**19 * 3**12))
    _, rep, _ = run(capsys, "kappa6", "--census")
    assert (rep["results"]["m_hex_primitive"], rep["results"]["m_box_primitive"]) == (3, 1)
    _, rep, _ = run(capsys, "kappa6", "--census", "--char", "5")
    assert (rep["results"]["m_hex_primitive"], rep["results"]["m_box_primitive"]) == (2, 0)


def test_pade(capsys):
    _, rep, _ = run(capsys, "pade", "--n", "3", "--curve", "2,1,-4")
    r = rep["results"]
    assert r["is_abel"] is True and r["norm"] == {"degree 3": "4"} and r["x_C"] == "0"
    _, rep, _ = run(capsys, "pade", "--torsion", "12", "--curve", "3,1/4,-1")
    assert rep["results"]["order"] == 6
    _, rep, _ = run(capsys, "pade", "--n", "4", "--curve", "0,0,1")
    assert rep["results"]["x_C"] == "infinity"


def test_degenerate_exit_code(capsys):
    # sqrt(1 + x^3) = 1 + x^3/2 + ...: the [2/1] system reads 0 * q1 = -1/2
    code, rep, err = run(capsys, "pade", "--n", "5", "--curve", "0,0,1")
    assert code == 3
    assert "degenerate" in err and rep["results"]["degenerate"]


def _canon(value):
    """Re-normalize exact strings and coefficient maps."""
    if isinstance(value, dict):
        if value and all(isinstance(k, str) and k.startswith("degree ") for k in value):
            return UniPoly.from_dict(value, QQ).to_dict()
        return {k: _canon(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_canon(v) for v in value]
    if isinstance(value, str):
        try:
            return str(Fraction(value))
        except ValueError:
            return value
    return value


@pytest.mark.parametrize(
    "argv",
    [
        ["counts", "--n", "12"],
        ["kappa6", "--census"],
        ["pade", "--n", "7", "--curve", "1,1,1"],
        ["cusps", "--n", "10"],
    ],
)
def test_json_roundtrip(capsys, argv):
    _, rep, _ = run(capsys, *argv)
    assert _canon(rep) == rep
    _, again, _ = run(capsys, *argv)
    assert again == rep


def test_fp_coefficient_maps_roundtrip(capsys):
    _, rep, _ = run(capsys, "kappa6", "--reduce", "7")
    F = GF(7)
    num = UniPoly.from_dict(rep["results"]["kappa"]["num"], F)
    assert num.to_dict() == rep["results"]["kappa"]["num"]


def test_text_and_out(tmp_path, capsys):
    assert main(["counts", "--n", "6"]) == 0
    text = capsys.readouterr().out
    assert "m_hex" in text and "10/3" in text
    target = tmp_path / "r.json"
    assert main(["--format", "json", "--out", str(target), "total", "--n", "4"]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["results"]["total"] == "3/2"
    assert main(["total", "--n", "4", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["results"]["total"] == "3/2"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "abelbelyi", "--format", "json", "counts", "--n", "6", "--char", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2
    assert "characteristic 2,3 excluded" in proc.stderr
