"""End-to-end command-line runs against temporary system files."""

import json

import pytest

from weylclosure.cli import main

EULER = """\
# second-order equation with polynomial solutions x and x^2
field: real
vars: 1
unknowns: 1
row: x^2*D^2 - 2*x*D + 2
"""

GRADIENT = """\
vars: 2
row: D1
row: D2
"""

VECTOR = """\
vars: 1
unknowns: 2
row: D [u1]
row: 1 [u2]
"""


@pytest.fixture
def euler_file(tmp_path):
    path = tmp_path / "euler.sys"
    path.write_text(EULER)
    return str(path)


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out) if out else None


# -- riquier ---------------------------------------------------------------

def test_riquier_euler(euler_file, capsys):
    code, doc = run(capsys, ["riquier", euler_file, "--s", "3"])
    assert code == 0
    assert doc["basis"] == ["D^2 - (2/x)*D + 2/x^2"]
    assert doc["s0"] == 2
    assert doc["parametric"] == ["1", "D"]


def test_riquier_gradient(tmp_path, capsys):
    path = tmp_path / "grad.sys"
    path.write_text(GRADIENT)
    code, doc = run(capsys, ["riquier", str(path), "--s", "1"])
    assert code == 0
    assert sorted(doc["basis"]) == ["D1", "D2"]
    assert doc["parametric"] == ["1"]


# -- member ----------------------------------------------------------------

def test_member_true_emits_witness(euler_file, capsys):
    code, doc = run(capsys, ["member", euler_file, "--q", "D^3"])
    assert code == 0
    assert doc["member"] is True
    assert doc["witness"] == {"w": "x^2", "cofactors": ["D"]}


def test_member_false_exit_code(tmp_path, capsys):
    path = tmp_path / "herm.sys"
    path.write_text("vars: 1\nrow: (-D + x)*(D + x)\nq: D + x\n")
    code, doc = run(capsys, ["member", str(path)])
    assert code == 1
    assert doc["member"] is False
    assert doc["witness"] is None


def test_member_cross_check_agrees(euler_file, capsys):
    code, doc = run(capsys, ["member", euler_file, "--q", "D^3", "--cross-check"])
    assert code == 0
    assert doc["lemma1_member"] is True
    assert doc["euclidean_member"] is True


def test_member_vector_system(tmp_path, capsys):
    path = tmp_path / "vec.sys"
    path.write_text(VECTOR)
    code, doc = run(capsys, ["member", str(path), "--q", "D^2 [u1] + x [u2]"])
    assert code == 0 and doc["member"] is True


def test_member_missing_candidate(euler_file, capsys):
    code = main(["member", euler_file])
    assert code == 2


# -- solve -----------------------------------------------------------------

def test_solve_exponential(tmp_path, capsys):
    path = tmp_path / "exp.sys"
    path.write_text("vars: 1\nrow: D - 1\n")
    code, doc = run(capsys, ["solve", str(path), "--point", "0",
                             "--init", "1=1", "--order", "5"])
    assert code == 0
    assert doc["point"] == ["0"]
    assert doc["derivative_values"]["u1"] == {str(k): "1" for k in range(6)}


def test_solve_uses_file_defaults(tmp_path, capsys):
    path = tmp_path / "exp.sys"
    path.write_text("vars: 1\nrow: D - 1\npoint: 0\nT: 3\n")
    code, doc = run(capsys, ["solve", str(path), "--init", "1=2"])
    assert code == 0
    assert doc["order"] == 3
    assert doc["derivative_values"]["u1"]["3"] == "2"


def test_solve_picks_regular_point_automatically(euler_file, capsys):
    # the monic basis has denominators vanishing at 0, so 0 must be avoided
    code, doc = run(capsys, ["solve", euler_file, "--init", "1=1, D=1",
                             "--order", "4"])
    assert code == 0
    assert doc["point"] != ["0"]


# -- prop1 -----------------------------------------------------------------

def test_prop1_counts(euler_file, capsys):
    code, doc = run(capsys, ["prop1", euler_file, "--point", "1", "--s", "4"])
    assert code == 0
    assert doc["columns"] == 5
    assert doc["rows"] == 3
    assert doc["nullity"] == 2
    assert doc["parametric_count"] == 2


def test_prop1_singular_point_is_an_input_error(euler_file, capsys):
    code = main(["prop1", euler_file, "--point", "0", "--s", "2"])
    assert code == 2


# -- verify-witness --------------------------------------------------------

def test_verify_witness_valid(euler_file, capsys):
    code, doc = run(capsys, ["verify-witness", euler_file, "--q", "D^3",
                             "--w", "x^2", "--h", "D"])
    assert code == 0 and doc["valid"] is True


def test_verify_witness_invalid(euler_file, capsys):
    code, doc = run(capsys, ["verify-witness", euler_file, "--q", "D^3",
                             "--w", "x", "--h", "D"])
    assert code == 1 and doc["valid"] is False


def test_verify_witness_rejects_rational_w(euler_file, capsys):
    code = main(["verify-witness", euler_file, "--q", "D^3",
                 "--w", "1/x", "--h", "D"])
    assert code == 2


# -- input errors ----------------------------------------------------------

def test_missing_file_is_an_input_error(capsys):
    assert main(["riquier", "/nonexistent/file.sys"]) == 2


def test_malformed_system_file(tmp_path, capsys):
    path = tmp_path / "bad.sys"
    path.write_text("rows: D\n")
    assert main(["riquier", str(path)]) == 2


def test_syntax_error_in_row(tmp_path, capsys):
    path = tmp_path / "bad.sys"
    path.write_text("vars: 1\nrow: 2x\n")
    assert main(["riquier", str(path)]) == 2


def test_complex_field_mode(tmp_path, capsys):
    path = tmp_path / "cplx.sys"
    path.write_text("field: complex\nvars: 1\nrow: D - i\n")
    code, doc = run(capsys, ["solve", str(path), "--point", "0",
                             "--init", "1=1", "--order", "2"])
    assert code == 0
    assert doc["derivative_values"]["u1"] == {"0": "1", "1": "i", "2": "-1"}
