import json
from pathlib import Path

import pytest

from skewcodec.cli import main

SPECS = Path(__file__).resolve().parent.parent / "demos" / "specs"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_skew_examples(capsys):
    code, out, _ = run(capsys, "skew", "mul", "w*x", "w*x", "--field", "F9")
    assert code == 0 and json.loads(out)["product"] == "w^4*x^2"
    code, out, _ = run(capsys, "skew", "rdiv", "x^6 - 1", "x + w^2", "--field", "F9")
    assert json.loads(out)["remainder"] == "0"
    code, out, _ = run(capsys, "skew", "rec", "w", "--field", "F9")
    assert json.loads(out)["reciprocal"] == "w"


def test_skew_ascending_operands_and_divisors(capsys):
    code, out, _ = run(capsys, "skew", "mul", "0,1", "w", "--field", "F9")
    assert json.loads(out)["product"] == "w^3*x"
    code, out, _ = run(capsys, "skew", "divisors", "--field", "F9", "--n", "6", "--degree", "1")
    assert code == 0 and "x + w^2" in json.loads(out)["divisors"]


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--field", "F27", "--eval", "w^13", "w^20*w^7", "w^13 + 1")
    rep = json.loads(out)
    assert rep["q"] == 27 and rep["theta_order"] == 3 and rep["eval"]["w^13"] == "w^13"
    # w^13 = -1 in F_27, printed as a power of w by the command line
    assert rep["eval"]["w^20*w^7"] == "w" and rep["eval"]["w^13 + 1"] == "0"
    code, out, _ = run(capsys, "field", "--moduli", "--p", "3", "--m", "2")
    assert json.loads(out)["count"] == 2


def test_code_worked_example(capsys):
    code, out, _ = run(capsys, "code", "--spec", str(SPECS / "ex68.json"))
    rep = json.loads(out)
    assert code == 0
    assert rep["gray"]["params"] == "[50,41,3]_9"
    assert rep["qecc"]["params"] == "[[50,32,3]]_9"
    assert rep["dual"]["verified"]


def test_code_toml_spec(capsys):
    code, out, _ = run(capsys, "code", "--spec", str(SPECS / "table1_row3.toml"), "distance")
    assert code == 0 and json.loads(out)["gray"]["params"] == "[24,19,4]_9"


def test_exit_codes(capsys, tmp_path):
    code, _, err = run(capsys, "code", "--spec", str(SPECS / "zero_code.json"), "distance")
    assert code == 3 and "empty code has no distance" in err
    code, _, _ = run(capsys, "code", "--spec", str(tmp_path / "missing.json"))
    assert code == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"field": "F9", "r": 4, "s": 2, "ell": "x^2 + w", "t": [1, 1, 1, 1]}')
    code, _, err = run(capsys, "code", "--spec", str(bad), "build")
    assert code == 3 and "NotADivisor" in err
    code, _, _ = run(capsys, "skew", "mul", "x +* 1", "x", "--field", "F9")
    assert code == 2
    code, _, _ = run(capsys, "skew", "mul", "x", "--field", "F9")
    assert code == 2
    code, _, _ = run(capsys, "field", "--field", "F8")
    assert code == 2
    code, _, _ = run(capsys, "code", "--spec", str(SPECS / "ex68.json"), "frobnicate")
    assert code == 2


def test_search(capsys):
    code, out, _ = run(capsys, "search", "--field", "F9", "--s", "6", "--deg-t", "")
    assert code == 0 and json.loads(out)["count"] == 0
    code, out, _ = run(capsys, "search", "--field", "F9", "--s", "6", "--deg-t", "0..1", "--budget", "5")
    rep = json.loads(out)
    assert code == 4 and rep["resume"] == 5


def test_reproduce_subset(capsys):
    code, out, _ = run(capsys, "reproduce", "ex610", "section3")
    rep = json.loads(out)
    assert code == 0 and rep["all_pass"]
    code, out, _ = run(capsys, "reproduce", "table1", "--human")
    assert code == 1 and "table1-row05" in out and "PASS" in out
    code, _, _ = run(capsys, "reproduce", "table9")
    assert code == 2
