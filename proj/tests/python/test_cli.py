import json
import os
import subprocess

import pytest

CLI = os.environ.get("SESHADRI_CLI")
pytestmark = pytest.mark.skipif(not CLI, reason="SESHADRI_CLI not set")


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def test_epsilon_json():
    p = run("epsilon", "-m", "[[0,8],[8,0]]", "-c", "1,1", "--json")
    assert p.returncode == 0
    r = json.loads(p.stdout)
    assert r["value"] == {"q": "4", "n": 1}
    assert r["attained_by"] == ["SqrtBound"]
    assert r["curves"] == []


def test_epsilon_text():
    p = run("epsilon", "-m", "[[0,4],[4,0]]", "-c", "1,1")
    assert p.returncode == 0
    assert "8/3" in p.stdout


def test_exit_codes():
    assert run("epsilon", "-m", "[[0,4],[4,0]]", "-c", "1,-1").returncode == 3
    assert run("epsilon", "-m", "[[0,4],[4]]", "-c", "1,1").returncode == 2
    assert run("plot", "-m", "[[0,1,1],[1,0,1],[1,1,0]]").returncode != 0


def test_plot_files(tmp_path):
    p = run("plot", "-m", "[[0,4],[4,0]]", "--delta", "1/100", "--formats", "csv,svg,tikz", "--out", str(tmp_path))
    assert p.returncode == 0
    names = sorted(os.listdir(tmp_path))
    assert any(n.endswith(".csv") for n in names)
    assert any(n.endswith(".svg") for n in names)
    assert "envelope.tikz" in names
    assert json.loads((tmp_path / "gaps.json").read_text())["uncovered"] == []
    csv = next(tmp_path.glob("*.csv")).read_text()
    assert len(csv.splitlines()) == 4
    again = tmp_path / "again"
    run("plot", "-m", "[[0,4],[4,0]]", "--delta", "1/100", "--formats", "svg", "--out", str(again))
    assert next(again.glob("*.svg")).read_bytes() == next(tmp_path.glob("*.svg")).read_bytes()


def test_survey():
    p = run("survey", "--family", "[[0,n],[n,0]]", "--range", "n=7..8", "--delta", "1/50")
    assert p.returncode == 0, p.stderr
    rows = json.loads(p.stdout)["rows"]
    assert [r["values"]["n"] for r in rows] == [7, 8]
    eight = rows[1]
    assert eight["piecewise_linear"] is False
    assert any(g["approx"][0] < 0 < g["approx"][1] for g in eight["gap_loci"])
