import json
import subprocess
import sys

import pytest

from kgunits.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_unit_group_text(capsys):
    code, out, err = run_cli(capsys, "unit-group", "F4", "C4")
    assert code == 0 and err == ""
    assert "U(F4C4): order 192" in out
    assert "structure: C2^2 x C4^2 x C3" in out
    assert "spectrum: 1:1 2:15 3:2 4:48 6:30 12:96" in out


def test_unit_group_json(capsys):
    code, out, err = run_cli(capsys, "unit-group", "F4", "C4", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["unit_count"] == 192
    assert payload["structure"] == "C2^2 x C4^2 x C3"
    spectrum = {order: count for order, count in payload["spectrum"]}
    assert spectrum[12] == 96


def test_decompose_text(capsys):
    code, out, err = run_cli(capsys, "decompose", "F3", "C4")
    assert code == 0
    assert "F3^2 + F9" in out
    assert "unit order from blocks: 32" in out


def test_decompose_json(capsys):
    code, out, err = run_cli(capsys, "decompose", "F2", "C6", "--format", "json")
    payload = json.loads(out)
    assert payload["decomposition"] == "F2[C2] + F4[C2]"
    assert sum(b["dimension"] for b in payload["blocks"]) == 6


def test_coset_count(capsys):
    code, out, err = run_cli(capsys, "coset-count", "w,y | w^6, y^2, y*w*y*w^-5")
    assert code == 0
    assert "12" in out
    code, out, err = run_cli(capsys, "coset-count", "x, y | x^3, y^2, [x,y] = x")
    assert "6" in out


def test_coset_count_limit(capsys):
    code, out, err = run_cli(capsys, "coset-count", "x, y | x^2", "--limit", "40")
    assert code == 2
    assert err.startswith("error:")


def test_table_text_shape(capsys):
    code, out, err = run_cli(capsys, "table", "--bound", "30")
    assert code == 0
    lines = out.rstrip("\n").split("\n")
    assert lines[0] == "unit groups of group algebras with size below 30 (24 rows)"
    assert lines[1].split() == ["field", "group", "size", "|U|", "decomposition",
                                "structure", "method"]
    assert len(lines) == 26
    assert lines[2].split() == ["F2", "C1", "2", "1", "F2", "C1", "decomposition"]


def test_table_json_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "table", "--bound", "100", "--format", "json")
    _, second, _ = run_cli(capsys, "table", "--bound", "100", "--format", "json")
    assert first == second
    rows = json.loads(first)["rows"]
    assert len(rows) == 52
    assert rows == sorted(rows, key=lambda r: (r["size"], r["p"] ** r["k"], r["group"]))


def test_table_jobs_equality(capsys):
    _, seq, _ = run_cli(capsys, "table", "--bound", "64", "--format", "json")
    _, par, _ = run_cli(capsys, "table", "--bound", "64", "--format", "json",
                        "--jobs", "2")
    assert seq == par


def test_verify_exit_zero(capsys):
    code, out, err = run_cli(capsys, "verify", "--bound", "200")
    assert code == 0
    assert "81/81" in out or "matched 81" in out or "81 of 81" in out


def test_scan_iso_text(capsys):
    code, out, err = run_cli(capsys, "scan-iso", "--bound", "700")
    assert code == 0
    assert out.startswith("minimum isomorphic pair: F5 C4 ~ C2xC2 at size 625")
    assert "pairs examined: 16 (expected 16); inconclusive: 0" in out
    assert "D8" in out and "Q8" in out
    assert "notes on unit groups of the nonabelian pairs:" in out


def test_scan_iso_json(capsys):
    code, out, err = run_cli(capsys, "scan-iso", "--bound", "300", "--format", "json")
    payload = json.loads(out)
    assert payload["minimum"] is None
    # one pair each at 16, 64, 81; at 256, ten F2 pairs of order-8 groups
    # plus F4 C4 / C2xC2
    assert payload["pair_count"] == 14


@pytest.mark.parametrize("argv", [
    ("unit-group", "F6", "C2"),
    ("unit-group", "F2", "C37"),
    ("unit-group", "F5", "C5"),      # size 3125 is past the enumeration cap
    ("decompose", "F2", "D8"),
    ("coset-count", "x | x^"),
])
def test_error_paths_exit_2(capsys, argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 2
    assert err.startswith("error:")
    assert out == ""


def test_installed_script():
    proc = subprocess.run(["kgunits", "table", "--bound", "10"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "F2" in proc.stdout
