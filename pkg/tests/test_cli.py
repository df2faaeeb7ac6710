import json
import subprocess
import sys

import numpy as np
import pytest

from cli_cases import CASES, INPUTS, golden_path, run_captured


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out = run_captured(CASES[name])
    assert code == 0
    assert out == golden_path(name).read_text()
    json.loads(out)


def test_spec_examples():
    _, out = run_captured(["nim", "analyze", "1,2,3"])
    assert out.strip() == '{"characteristic":0,"winner":"second","move":null}'
    _, out = run_captured(CASES["transform-hadamard"])
    assert [re for re, im in json.loads(out)["values"]] == [0.5] * 4
    doc = json.loads(run_captured(CASES["galois"])[1])
    assert [re for re, im in doc["g"]] == [1, 2, 1, 1]
    assert [re for re, im in doc["zero_dividends"]] == [-1, -2]


def test_mobius_zeta_round_trip(tmp_path):
    src = json.loads(golden_path("transform-mobius").read_text())
    step = tmp_path / "mobius.json"
    step.write_text(json.dumps(src))
    code, out = run_captured(["transform", "--kind", "zeta", str(step)])
    assert code == 0
    original = json.loads((INPUTS / "game3.json").read_text())
    assert np.abs(np.array(json.loads(out)["values"]) - original["values"]).max() < 1e-10


def test_round_trip_random_game(tmp_path, rng):
    values = rng.normal(size=32).tolist()
    game = tmp_path / "g.json"
    game.write_text(json.dumps({"players": 5, "values": values}))
    _, out = run_captured(["transform", "--kind", "mobius", str(game)])
    step = tmp_path / "m.json"
    step.write_text(out)
    _, out = run_captured(["transform", "--kind", "zeta", str(step)])
    assert np.abs(np.array(json.loads(out)["values"]) - values).max() < 1e-10


def test_precision_flag():
    _, out = run_captured(["interact", "spectral", CASES["interact-spectral"][-1], "--precision", "3"])
    assert json.loads(out)["eigenvalues"] == [0.707, -0.707]


@pytest.mark.parametrize(
    "argv, kind",
    [
        (["galois", "/nonexistent/game.json"], "io"),
        (["interact", "spectral", "a01"], "io"),
        (["interact", "spectral", None], "hermitian"),
        (["expect", None, "--independent", "2,0"], "domain"),
        (["mle", None, "--t", "0.5"], "shape"),
        (["expect", None, "--state", None], "state"),
        (["galois", None], "not-normalizable"),
    ],
)
def test_error_objects(argv, kind, tmp_path):
    fill = {
        "interact": str(INPUTS / "a01.json"),
        "expect": str(INPUTS / "galois_2310.json"),
        "mle": str(INPUTS / "galois_2310.json"),
        "galois": str(INPUTS / "delta.json"),
    }
    if argv[0] == "expect" and "--state" in argv:
        bad = tmp_path / "u.json"
        bad.write_text('{"values": [1, 1, 0, 0]}')
        argv = ["expect", fill["expect"], "--state", str(bad)]
    argv = [fill[argv[0]] if a is None else a for a in argv]
    code, out = run_captured(argv)
    assert code == 1
    doc = json.loads(out)
    assert doc["error"] == kind and doc["detail"]


def test_malformed_inputs(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out = run_captured(["galois", str(bad)])
    assert code == 1 and json.loads(out)["error"] == "json"
    bad.write_text('{"players": 2}')
    code, out = run_captured(["galois", str(bad)])
    assert code == 1 and json.loads(out)["error"] == "format"
    bad.write_text('{"players": 2, "values": [1, true, 0, 0]}')
    assert json.loads(run_captured(["galois", str(bad)])[1])["error"] == "format"


@pytest.mark.parametrize(
    "argv",
    [[], ["bogus"], ["transform", "--kind", "fourier", "x.json"], ["nim", "analyze", "1,a"], ["entangle", "h.json", "--dims", "2"]],
)
def test_usage_errors(argv, capsys):
    from gamealgebra.cli import run

    assert run(argv) == 2
    assert capsys.readouterr().out == ""


def test_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "gamealgebra", "nim", "analyze", "1,2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == golden_path("nim-move").read_text()
    proc = subprocess.run(
        [sys.executable, "-m", "gamealgebra", "galois", "/nonexistent.json"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 1
    assert json.loads(proc.stdout)["error"] == "io"
    assert "io" in proc.stderr
