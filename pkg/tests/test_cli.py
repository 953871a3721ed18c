import json
import os

import pytest

from nkoszul.cli import main

HERE = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
ONE_LOOP = os.path.join(HERE, "inputs", "one_loop_n3.json")
TWO_LOOP = os.path.join(HERE, "inputs", "two_loop_n3.json")
COMMUTATIVE = os.path.join(HERE, "inputs", "commutative_n2.json")


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, argv):
    code, out, _ = run(capsys, argv)
    return code, json.loads(out)


def test_dual_command(capsys):
    code, rep = run_json(capsys, ["dual", ONE_LOOP])
    assert code == 0
    assert rep["command"] == "dual"
    assert rep["agreement"] is True
    assert rep["dual_dims"][:4] == [1, 1, 1, 1]
    assert rep["support_dims"][2] == 0
    assert rep["echo"]["input"] == ONE_LOOP


def test_dual_command_two_loop_dims(capsys):
    code, rep = run_json(capsys, ["dual", TWO_LOOP, "--window", "-8", "8"])
    assert code == 0
    assert rep["dual_dims"][:5] == [1, 2, 4, 8, 16]


def test_functor_command_both_directions(capsys):
    for which in ("psi", "nu"):
        code, rep = run_json(
            capsys, ["functor", TWO_LOOP, "--which", which, "--module", "M"])
        assert code == 0
        assert rep["is_n_complex"] is True
        assert rep["orthogonal_annihilates"] is True
        assert rep["complex"]["period"] > 0


def test_contract_command(capsys):
    code, rep = run_json(
        capsys, ["contract", TWO_LOOP, "--complex", "nu(M)"])
    assert code == 0
    assert rep["is_2_complex"] is True
    assert rep["contracted"]["period"] == 2


def test_check_module_predicate(capsys):
    code, rep = run_json(
        capsys, ["check", ONE_LOOP, "--predicate", "in_L",
                 "--object", "X"])
    assert code == 0
    assert rep["verdict"] is True


def test_check_complex_predicate_with_witness(capsys):
    code, rep = run_json(
        capsys, ["check", ONE_LOOP, "--predicate", "in_Y",
                 "--object", "F(X)"])
    assert code == 0
    assert rep["verdict"] is True
    assert rep["witness"]["verts"]


def test_check_torsion_predicate(capsys):
    code, rep = run_json(
        capsys, ["check", ONE_LOOP, "--predicate", "torsion_submodule",
                 "--object", "M"])
    assert code == 0
    assert "torsion_dims" in rep


def test_r_gate_rejects_non_torsion_predicates(capsys):
    code, out, err = run(
        capsys, ["check", ONE_LOOP, "--predicate", "in_L",
                 "--object", "X", "--r", "2"])
    assert code == 2
    assert "input error" in err


def test_unknown_predicate_exits_2(capsys):
    code, out, err = run(
        capsys, ["check", ONE_LOOP, "--predicate", "bogus",
                 "--object", "M"])
    assert code == 2
    assert "unknown predicate" in err


def test_missing_module_exits_2(capsys):
    code, out, err = run(
        capsys, ["functor", ONE_LOOP, "--which", "psi",
                 "--module", "nothere"])
    assert code == 2
    assert "no module named" in err


def test_bad_input_file_exits_2(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, out, err = run(capsys, ["dual", str(bad)])
    assert code == 2
    assert "invalid JSON" in err


def test_verify_command(capsys):
    code, rep = run_json(
        capsys, ["verify", "--suite", "dual_agreement", "--trials", "6"])
    assert code == 0
    assert rep["passed"] is True
    assert rep["suite"] == "dual_agreement"


def test_verify_unknown_suite_exits_2(capsys):
    with pytest.raises(SystemExit):
        main(["verify", "--suite", "bogus"])
    capsys.readouterr()


def test_report_flag_writes_identical_bytes(capsys, tmp_path):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        code, _, _ = run(capsys, ["dual", COMMUTATIVE,
                                  "--report", str(p)])
        assert code == 0
    assert p1.read_bytes() == p2.read_bytes()


def test_windowed_dual_gate(capsys, tmp_path):
    doc = {
        "vertices": 1,
        "arrows": [["x", 0, 0], ["y", 0, 0]],
        "n": 2,
        "relations": [],
        "window": [-4, 4],
        "modules": {"M": {"over": "algebra",
                          "verts": {"0": [0]}, "actions": {}}},
    }
    path = tmp_path / "free.json"
    path.write_text(json.dumps(doc))
    code, out, err = run(
        capsys, ["functor", str(path), "--which", "nu", "--module", "M"])
    assert code == 2
    assert "windowed" in err
    code, rep = run_json(
        capsys, ["functor", str(path), "--which", "nu", "--module", "M",
                 "--allow-windowed-dual"])
    assert code == 0
