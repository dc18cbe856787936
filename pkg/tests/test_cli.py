import io
import json
import subprocess
import sys

import pytest

from multzagreb.cli import main
from multzagreb.constructors import k_n_s
from multzagreb.g6 import decode_g6, encode_g6
from multzagreb.graph import is_isomorphic


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_indices_text_and_json():
    code, text = run("indices", "C~")  # K4
    assert code == 0
    assert "PI1=6561" in text and "PI2=" + str(3**12) in text
    code, text = run("indices", "--format", "json", "--ln", "Bw")  # K3
    doc = json.loads(text)
    assert doc["schema"] == 1
    (rec,) = doc["records"]
    assert rec["n"] == 3 and rec["PI1"] == "64" and "ln_PI2" in rec


def test_indices_from_file(tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("C~\n\nBw\n")
    code, text = run("indices", "--input", str(f), "--format", "csv")
    assert code == 0
    lines = text.splitlines()
    assert lines[0].startswith("g6,n,m") and len(lines) == 3


def test_malformed_line_reports_its_number(tmp_path, capsys):
    f = tmp_path / "bad.g6"
    f.write_text("C~\nD?A\n")
    code, _ = run("indices", "--input", str(f))
    assert code == 2
    assert "line 2" in capsys.readouterr().err


def test_bridges_command():
    g = k_n_s((6, 2))
    code, text = run("bridges", "--format", "json", encode_g6(g))
    rec = json.loads(text)["records"][0]
    assert code == 0
    assert len(rec["bridges"]) == 2 and rec["internal"] == []


def test_bridges_rejects_disconnected(capsys):
    code, _ = run("bridges", encode_g6(decode_g6("C?")))
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_construct():
    code, text = run("construct", "kns", "--n", "6", "--k", "2")
    assert code == 0 and is_isomorphic(decode_g6(text.strip()), k_n_s((6, 2)))
    code, text = run("construct", "kns", "--n", "6", "--k", "2", "--indices")
    assert "PI2=61509375" in text
    code, text = run("construct", "cycle", "--n", "5")
    assert code == 0 and decode_g6(text.strip()).m == 5


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "cns", "--n", "6", "--k", "4"],
        ["construct", "cns", "--n", "6"],
        ["construct", "star", "--n", "0"],
        ["verify", "--n-max", "9"],
        ["enumerate", "--n", "9"],
        ["enumerate", "--n", "5", "--workers", "0"],
        ["g6", "encode", "0-1"],
        ["nonsense"],
    ],
)
def test_usage_errors_exit_two(argv, capsys):
    assert run(*argv)[0] == 2


def test_enumerate(capsys, tmp_path):
    code, text = run("enumerate", "--n", "4")
    assert code == 0
    assert len(text.splitlines()) == 6
    assert "count 6" in capsys.readouterr().err
    target = tmp_path / "g.g6"
    code, _ = run("enumerate", "--n", "5", "--k", "2", "--output", str(target))
    assert code == 0 and len(target.read_text().splitlines()) == 3


def test_verify_formats(tmp_path):
    code, text = run("verify", "--n-max", "5")
    assert code == 0 and "12/12 reports passed" in text
    code, text = run("verify", "--n-max", "5", "--format", "json")
    assert json.loads(text)["passed"] is True
    target = tmp_path / "v.csv"
    code, _ = run("verify", "--n-max", "5", "--format", "csv", "--output", str(target))
    assert code == 0 and len(target.read_text().splitlines()) == 13


def test_lemmas(capsys):
    code, text = run("lemmas", "--trials", "10", "--format", "json")
    assert code == 0
    assert json.loads(text)["passed"] is True


def test_g6_encode_decode():
    code, text = run("g6", "encode", "--n", "3", "0-1", "1-2")
    assert code == 0 and text.strip() == "Bg"
    code, text = run("g6", "decode", "Bg")
    assert json.loads(text) == {"n": 3, "edges": [[0, 1], [1, 2]]}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "multzagreb", "construct", "path", "--n", "3"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert proc.stdout.strip() == "Bg"
