import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from pspin.cli import render, run, substitute_k
from pspin.opensector import kp_one_point


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_closed_json(capsys):
    code, out, _ = _run(capsys, "closed", "--p", "3", "--g-max", "4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["command"] == "closed"
    last = doc["records"][-1]
    assert last == {"model": "gue-closed", "p": 3, "g": "4", "n": "9", "j": 0, "value": "1/746496"}


def test_json_roundtrip_is_byte_identical(capsys):
    _, out, _ = _run(capsys, "open", "--p", "3", "--g-max", "5/2", "--format", "json")
    assert render(json.loads(out), "json") == out
    _, again, _ = _run(capsys, "open", "--p", "3", "--g-max", "5/2", "--format", "json")
    assert again == out


def test_gw_tsv(capsys):
    code, out, _ = _run(capsys, "gw", "--d-max", "12", "--g-max", "4", "--format", "tsv")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "d\tg\tvalue" and len(lines) == 55
    assert "3\t2\t13/7680" in lines


def test_substitute_k():
    vals = {r.g: str(r.value) for r in substitute_k(kp_one_point(2), 1)}
    assert vals[F(1)] == "13/24" and vals[F(3, 2)] == "1/6"
    assert {r.g: str(r.value) for r in substitute_k(kp_one_point(1), 0)}[F(1)] == "1/24"


def test_open_with_k(capsys):
    code, out, _ = _run(capsys, "open", "--p", "2", "--g-max", "3/2", "--k", "1", "--format", "tsv")
    assert code == 0 and "kp\t2\t1\t1\t\t13/24" in out


def test_lie_and_euler(capsys):
    code, out, _ = _run(capsys, "lie", "--p", "3", "--model", "sp", "--format", "json")
    assert code == 0 and json.loads(out)["records"][1]["value"] == "1/864"
    code, out, _ = _run(capsys, "euler", "--g-max", "4", "--format", "json")
    recs = json.loads(out)["records"]
    assert [r["value"] for r in recs if r["kind"] == "nonorientable"] == ["-1/24", "-7/240", "-31/504", "-127/480"]


def test_oracle_command(capsys):
    code, out, _ = _run(capsys, "oracle", "--model", "p3-airy", "--sigma", "1", "--format", "json")
    rec, = json.loads(out)["records"]
    assert code == 0 and float(rec["rel_error"]) < 1e-6


def test_usage_errors(capsys):
    assert _run(capsys, "closed", "--p", "3", "--bogus")[0] == 2
    assert _run(capsys, "frobnicate")[0] == 2
    assert _run(capsys, "closed", "--p", "3", "--g-max", "x/y")[0] == 2
    assert _run(capsys, "open", "--p", "3", "--k", "1", "--k-symbolic")[0] == 2


def test_computation_error(capsys):
    code, _, err = _run(capsys, "closed", "--p", "1")
    assert code == 1 and "p must be" in err
    assert _run(capsys, "gw", "--d-max", "0")[0] == 1


def test_verify_passing_suite(capsys):
    code, out, err = _run(capsys, "verify", "--suite", "gw", "--format", "tsv")
    assert code == 0 and "54 checks, 0 failed" in err


def test_verify_corrupted_golden_names_row(tmp_path, capsys):
    from importlib import resources
    text = resources.files("pspin").joinpath("data/golden_kp.tsv").read_text()
    lines = text.splitlines()
    lines[2] = lines[2].replace("1/24 + 1/2*k^2", "1/24 + 1/3*k^2")
    bad = tmp_path / "bad.tsv"
    bad.write_text("\n".join(lines) + "\n")
    code, _, err = _run(capsys, "verify", "--suite", "virasoro", "--golden", str(bad))
    assert code == 3 and "row 3" in err


def test_verify_malformed_golden(tmp_path, capsys):
    bad = tmp_path / "bad.tsv"
    bad.write_text("model\tp\tinsertions\tgenus\tvalue\nkp\t2\t1\t1\n")
    code, _, err = _run(capsys, "verify", "--suite", "virasoro", "--golden", str(bad))
    assert code == 1 and "row 2" in err


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "t.json"
    assert run(["closed", "--p", "2", "--g-max", "2", "--format", "json", "--out", str(dest)]) == 0
    assert json.loads(dest.read_text())["records"][1]["value"] == "1/1152"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "pspin", "closed", "--p", "4", "--g-max", "2", "--format", "tsv"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.splitlines()[-1].endswith("3/2560")


@pytest.mark.parametrize("fmt", ["pretty", "tsv", "json"])
def test_formats_never_print_floats_for_indices(capsys, fmt):
    _, out, _ = _run(capsys, "open", "--p", "3", "--g-max", "3/2", "--format", fmt)
    assert "1.5" not in out and "3/2" in out
