import json
import subprocess
import sys

import pytest

from clifgrade.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_table1_json(capsys):
    code, obj = run_json(capsys, "table1")
    assert code == 0 and obj["schema"] == 1
    assert [r["grading_rank"] for r in obj["rows"]] == [0, 1, 1, 2, 2, 2, 3, 3]
    assert obj["rows"][0]["conjugation"] is None


def test_aut_remark_example(capsys):
    code, obj = run_json(capsys, "aut", "--field", "H", "--adjoint", "rev", "--d", "1", "0")
    assert code == 0 and obj["dimension"] == 1 and obj["grading_rank"] == 1


def test_aut_with_basis(capsys):
    code, obj = run_json(capsys, "aut", "--field", "H''", "--adjoint", "conj", "--d", "1", "--basis")
    assert code == 0 and len(obj["basis"]) == 3


def test_higher_verify(capsys):
    code, obj = run_json(capsys, "higher", "--field", "R", "--d", "1", "0", "--n", "2", "--verify")
    assert code == 0 and obj["passed"]
    assert obj["data"]["A_dimension"] == obj["data"]["F_dimension"] == 6


def test_higher_2H(capsys):
    code, obj = run_json(capsys, "higher", "--field", "2H", "--d", "1", "0", "--n", "1", "--verify")
    assert code == 0
    d = obj["data"]
    assert d["A_dimension"] == 16 and d["A_grading_rank"] == 5 and d["structure_constants_match"]


def test_higher_presentation_only(capsys):
    code, obj = run_json(capsys, "higher", "--field", "C", "--adjoint", "conj", "--d", "2", "2", "--n", "1")
    assert code == 0 and obj["A"] == "Cl(2,3)" and obj["split_case"]


def test_verify_alias_and_symplectic(capsys):
    code, obj = run_json(capsys, "verify", "--field", "H''", "--adjoint", "conj", "--d", "2")
    assert code == 0 and any("Sp(4;R)" in c["name"] for c in obj["checks"])
    code2, obj2 = run_json(capsys, "iso-check", "--field", "H''", "--adjoint", "conj", "--d", "2")
    assert obj2 == obj


def test_grading(capsys):
    code, obj = run_json(capsys, "grading", "--field", "H", "--adjoint", "rev", "--d", "1")
    assert code == 0 and obj["reduced"] and obj["generators"] == [[1, 1]]


def test_blockgrade(capsys):
    code, obj = run_json(capsys, "blockgrade", "--d", "4")
    assert code == 0 and obj["data"]["grading_rank"] == 2
    code, obj = run_json(capsys, "blockgrade", "--d", "4", "--splits", "2,1:1,2:2")
    assert code == 1 and not obj["passed"]
    code, obj = run_json(capsys, "blockgrade", "--d", "2", "--metric", "0 1; -1 0")
    assert code == 1 and "skew" in json.dumps(obj)


@pytest.mark.parametrize("argv", [
    ["aut", "--field", "Q"],
    ["aut", "--field", "R", "--adjoint", "conj"],
    ["aut", "--field", "H"],
    ["aut", "--field", "H", "--adjoint", "rev", "--d", "1", "2", "3"],
    ["higher", "--field", "R", "--d", "1"],
    ["blockgrade", "--d", "4", "--splits", "x"],
    ["blockgrade", "--d", "4", "--metric", "1"],
    ["nonsense"],
    [],
])
def test_usage_errors(capsys, argv):
    assert main(argv) == 2


def test_deterministic_json(capsys):
    argv = ["aut", "--field", "2H", "--adjoint", "conj", "--d", "1", "1", "--basis", "--json"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first


def test_selftest_subset(capsys):
    code, out, _ = run(capsys, "selftest", "--only", "5", "8")
    assert code == 0
    assert out.count("PASS") == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "clifgrade", "table1", "--json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout)["schema"] == 1
