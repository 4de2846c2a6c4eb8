import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from centroid_bm.cli import main
from centroid_bm.figures import reference_triangle
from centroid_bm.geometry import SQUARE, write_polygon


@pytest.fixture(scope="module")
def ledger_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("ledger") / "ledger.json"
    assert main(["certify", "--out", str(path)]) == 0
    return path


def test_certify_writes_passing_ledger(ledger_path):
    doc = json.loads(ledger_path.read_text())
    assert doc["verdict"] == "pass"
    assert [e["name"] for e in doc["entries"]] == [
        "witness", "case1_cover", "case2_cover", "subcase_1_2", "subcase_2_2",
    ]
    assert doc["tool"]["name"] == "centroid_bm"
    assert doc["config"] == {"grid_step": "1/64", "tamper_case1": False}


def test_certify_is_byte_identical(ledger_path, tmp_path):
    again = tmp_path / "again.json"
    assert main(["certify", "--out", str(again)]) == 0
    assert again.read_bytes() == ledger_path.read_bytes()


def test_replay_pass(ledger_path, capsys):
    assert main(["replay", str(ledger_path)]) == 0
    assert "replay: pass" in capsys.readouterr().err


def test_replay_corrupted(ledger_path, tmp_path, capsys):
    doc = json.loads(ledger_path.read_text())
    doc["entries"][2]["certificate"]["steps"][0]["check"] = "forged"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(doc))
    assert main(["replay", str(bad)]) == 1
    assert "case2_cover" in capsys.readouterr().err


def test_replay_single_certificate(tmp_path):
    from centroid_bm.theorem import witness_check

    path = tmp_path / "w.json"
    path.write_text(json.dumps(witness_check().to_json()))
    assert main(["replay", str(path)]) == 0


@pytest.mark.parametrize("content", ["", "{not json", "[]"])
def test_replay_bad_input(tmp_path, content):
    path = tmp_path / "x.json"
    path.write_text(content)
    assert main(["replay", str(path)]) in (1, 2)
    if content in ("", "{not json"):
        assert main(["replay", str(path)]) == 2


def test_replay_missing_file(tmp_path, capsys):
    assert main(["replay", str(tmp_path / "nope.json")]) == 2
    assert "no such file" in capsys.readouterr().err


def test_certify_tampered(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["certify", "--tamper-case1", "--out", str(out)]) == 1
    assert "case1_cover" in capsys.readouterr().err
    assert json.loads(out.read_text())["verdict"] == "fail"
    assert main(["replay", str(out)]) == 1


def test_oracle_search(tmp_path):
    out = tmp_path / "o.json"
    assert main(["oracle-search", "--grid", "4", "--out", str(out)]) == 0
    res = json.loads(out.read_text())["result"]
    assert res["min_gauge"] == "5/2" and res["at_least_5/2"] is True


def test_oracle_bad_grid(capsys):
    assert main(["oracle-search", "--grid", "1"]) == 2
    assert main(["oracle-search", "--grid", "zero"]) == 2


def test_distance_on_polygon_files(tmp_path):
    c, d, out = tmp_path / "c.json", tmp_path / "d.json", tmp_path / "r.json"
    write_polygon(SQUARE, c)
    write_polygon(reference_triangle(), d)
    assert main(["distance", str(c), str(d), "--out", str(out)]) == 0
    first = out.read_bytes()
    res = json.loads(first)["result"]
    assert 2.495 <= res["lambda_hat"] <= 2.505
    assert F(res["lambda_exact"]) == F(res["exact_gauges"][0]) * F(res["exact_gauges"][1])
    assert main(["distance", str(c), str(d), "--out", str(out)]) == 0
    assert out.read_bytes() == first


def test_distance_rejects_bad_polygon(tmp_path, capsys):
    c, d = tmp_path / "c.json", tmp_path / "d.json"
    write_polygon(SQUARE, c)
    d.write_text(json.dumps({"vertices": [["0", "0"], ["1", "0"], ["2", "0"]]}))
    assert main(["distance", str(c), str(d)]) == 2
    assert "error:" in capsys.readouterr().err


def test_claim_square(tmp_path):
    out = tmp_path / "c.json"
    assert main(["claim", "--body", "square", "--samples", "16", "--out", str(out)]) == 0
    res = json.loads(out.read_text())["result"]
    assert res["within_bound"] and F(res["max_gauge"]) <= 3


def test_claim_rejects_asymmetric_body():
    assert main(["claim", "--body", "triangle", "--samples", "8"]) == 2


def test_conjecture_polygon_file(tmp_path):
    from centroid_bm.extensions import rational_pentagon

    poly, out = tmp_path / "p.json", tmp_path / "r.json"
    write_polygon(rational_pentagon(), poly)
    assert main(["conjecture", "--polygon", str(poly), "--samples", "16", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["result"]["within_bound"]


def test_conjecture_unknown_body():
    assert main(["conjecture", "--body", "circle"]) == 2


def test_cube_simplex(capsys):
    assert main(["cube-simplex"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["result"]["verdict"] == "pass"


def test_figures_command(tmp_path, capsys):
    assert main(["figures", "--outdir", str(tmp_path)]) == 0
    assert len(list(tmp_path.glob("*.svg"))) == 6


def test_usage_errors():
    assert main([]) == 2
    assert main(["bogus"]) == 2
    assert main(["certify", "--grid-step", "x/y"]) == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "centroid_bm", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and "centroid-bm" in proc.stdout
