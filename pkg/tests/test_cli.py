import json

import pytest

from azindex.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_range():
    assert parse_range("4..11") == range(4, 12) or list(parse_range("4..11")) == list(range(4, 12))
    assert list(parse_range("7")) == [7]


def test_compute(capsys, tmp_path):
    code, out, _ = run(capsys, "compute", "--graph6", "Dhc")
    assert code == 0 and out.strip() == "40/1 (40.0)"
    code, out, _ = run(capsys, "compute", "--index", "abc", "--graph6", "A_")
    assert code == 0 and out.strip() == "0.0"
    f = tmp_path / "g.g6"
    f.write_text("Dhc\nD!!\n")
    code, out, err = run(capsys, "compute", str(f))
    assert code != 0 and "2" in err


def test_compute_degenerate_continues(capsys):
    code, out, err = run(capsys, "compute", "--graph6", "A_", "--graph6", "Bw")
    assert code == 1
    assert "24/1" in out and err


def test_family(capsys):
    code, out, _ = run(capsys, "family", "--name", "b-prime", "--k", "0")
    assert code == 0 and "7904/27" in out
    code, out, _ = run(capsys, "family", "--name", "u-prime", "--k", "1")
    assert code == 0 and "n=20" in out and "5504/27" in out
    code, _, err = run(capsys, "family", "--name", "psi", "--class", "bicyclic", "--n", "6")
    assert code != 0 and err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--count")
    assert code == 0 and out.strip() == "6"
    code, out, _ = run(capsys, "enumerate", "--n", "4", "--m", "4", "--max-degree", "4")
    assert code == 0 and len(out.split()) == 2


def test_verify(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--theorem", "unicyclic", "--n", "4..6")
    assert code == 0
    doc = json.loads(out)
    assert all(c["status"] == "PASS" for c in doc["certificates"])
    dest = tmp_path / "ng.csv"
    code, _, _ = run(capsys, "verify", "--theorem", "ng", "--n", "4..5", "--format", "csv", "-o", str(dest))
    assert code == 0 and "two_sided_bound" in dest.read_text()


def test_verify_budget_guard(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "t5", "--n", "11")
    assert code != 0 and "allow-large" in err


def test_verify_reports_failure(capsys):
    code, _, err = run(capsys, "verify", "--theorem", "wang", "--n", "5")
    assert code == 1 and "DLo" in err


def test_ng_scan(capsys):
    code, out, _ = run(capsys, "ng-scan", "--n", "4")
    assert code == 0
    rec = json.loads(out.splitlines()[0])
    assert rec["sum"] == "48/1" and rec["equality_class"] == "P4"
