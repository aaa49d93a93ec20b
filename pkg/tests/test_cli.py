import json
import subprocess
import sys

import pytest

from toroidal.cli import main, parse_generator, UsageError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_generator():
    assert parse_generator("e_1") == ("e", 1, None, 1)
    assert parse_generator("f_0,1") == ("f", 0, 1, 1)
    assert parse_generator("Y_1^-1") == ("Y", 1, None, -1)
    assert parse_generator("Q^-1") == ("Q", None, None, -1)
    with pytest.raises(UsageError):
        parse_generator("e_1^2")


def test_verify_daha(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "daha", "--m", "3", "--bound", "1")
    assert code == 0
    assert out.startswith("PASS daha")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hecke", "--trials", "20", "--json")
    report = json.loads(out)
    assert code == 0 and report["ok"] and report["suite"] == "hecke"
    assert "seconds" not in report


def test_verify_failure_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "sectors", "--k", "1", "--m", "3")
    assert code == 1
    assert out.startswith("FAIL sectors")


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nosuch")
    assert code == 2 and "unknown suite" in err


def test_act_tensor(capsys):
    code, out, _ = run(capsys, "act", "--module", "tensor", "--gen", "e_1", "--n", "3", "--vec", '{"index":[2,2]}')
    assert code == 0
    terms = json.loads(out)["terms"]
    assert terms == [{"coeff": "1", "index": [1, 2]}, {"coeff": "1", "index": [2, 1]}]


def test_act_torus_bracket(capsys):
    code, out, _ = run(capsys, "act", "--module", "torus", "--gen", "bracket", "E12*z", "E21*D")
    assert code == 0
    assert out.strip() == "(1) * E1_1 * z^1 * D^1 + (-u^3) * E2_2 * z^1 * D^1"


def test_act_vm_and_wedge(capsys):
    code, out, _ = run(capsys, "act", "--module", "vm", "--gen", "Y_1^-1", "--vec", '{"index":[2,1]}')
    assert code == 0 and json.loads(out)["terms"][0]["y"] == [1, 0]
    vec = '{"n":3,"m":2,"sector":2,"terms":[{"coeff":"1","index":[1,2]}]}'
    code, out, _ = run(capsys, "act", "--module", "wedge", "--gen", "k_1", "--vec", vec)
    assert code == 0 and json.loads(out)["terms"][0]["index"] == [2, 1]


def test_act_fock_vacuum(capsys):
    code, out, _ = run(capsys, "act", "--module", "fock", "--gen", "k_0",
                       "--vec", '{"n":3,"sector":0,"terms":[{"coeff":"1","deviations":[]}]}')
    assert code == 0 and json.loads(out)["terms"] == [{"coeff": "q", "deviations": []}]


@pytest.mark.parametrize("argv", [
    ["act", "--module", "tensor", "--gen", "e_1", "--vec", '{"index":[2,2'],
    ["act", "--module", "tensor", "--gen", "e_7", "--vec", '{"index":[2,2]}'],
    ["act", "--module", "tensor", "--gen", "e_1", "--vec", '{"index":[2,2],"coeff":"q+"}'],
    ["act", "--module", "torus", "--gen", "bracket", "E12*w", "E21"],
    ["act", "--module", "tensor", "--gen", "e_1"],
    ["dims", "--n", "1"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as info:
        main(["act", "--module", "nosuch", "--gen", "e_1"])
    assert info.value.code == 2


def test_dims_table(capsys):
    code, out, _ = run(capsys, "dims", "--sector", "0", "--n", "2", "--max-degree", "3", "--json")
    data = json.loads(out)
    assert code == 0 and data["ok"]
    assert [r["partitions"] for r in data["dims"]] == [1, 4, 9, 20]
    assert all(r["wedge"] == r["fock"] == r["partitions"] for r in data["dims"])


def test_matrix_k_is_diagonal(capsys):
    code, out, _ = run(capsys, "matrix", "--module", "fock", "--gen", "k_1", "--degree", "1", "--json")
    data = json.loads(out)
    assert code == 0 and data["source"] == data["target"]
    rows = data["rows"]
    assert all(rows[r][c] == "0" for r in range(len(rows)) for c in range(len(rows)) if r != c)
    assert all(rows[r][r] != "0" for r in range(len(rows)))


def test_matrix_escape_is_noted(capsys):
    code, out, _ = run(capsys, "matrix", "--gen", "e_0", "--degree", "1", "--m", "3")
    assert code == 0
    assert out.splitlines()[0].startswith("# ") and "appended" in out


def test_matrix_window_widens():
    from toroidal.cli import _matrix
    from toroidal.fock import FockSpace, fock_basis
    from toroidal.scalars import ONE

    F = FockSpace(3, 0)
    images = [F.act("e", 0, {j: ONE}) for j in fock_basis(3, 0, 1)[1]]
    target, window, extra = _matrix(images, lambda d: fock_basis(3, 0, d)[d], F.degree, 1, window=0)
    assert window == 1 and extra == []
    assert set(fock_basis(3, 0, 2)[2]) <= set(target)


def test_uce_box_too_small(capsys):
    code, _, err = run(capsys, "verify", "--suite", "uce", "--bound", "2", "--trials", "10")
    assert code == 2 and "need N >= 3" in err


def test_console_script_is_deterministic():
    argv = [sys.executable, "-m", "toroidal", "verify", "--suite", "torus", "--n", "3", "--bound", "1", "--json"]
    first = subprocess.run(argv, capture_output=True, text=True)
    second = subprocess.run(argv, capture_output=True, text=True)
    assert first.returncode == 0
    assert first.stdout == second.stdout
