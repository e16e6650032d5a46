import json

import pytest

from rsperm.cli import main, split_top_level


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_split_top_level():
    assert split_top_level("0,1,4,6") == ["0", "1", "4", "6"]
    assert split_top_level("[0,0],[1,2]") == ["[0,0]", "[1,2]"]
    with pytest.raises(ValueError):
        split_top_level("[0,1")


def test_affine_lists_paper_maps(capsys):
    code, out, _ = run(capsys, "affine", "--field", "13", "--points", "0,1,4,6")
    assert code == 0
    assert "affine permutations of the point set: 3" in out
    for poly in ("x", "3*x + 1", "9*x + 4"):
        assert poly in out


def test_affine_full_field_count(capsys):
    code, out, _ = run(capsys, "affine", "--field", "5", "--points", "0,1,2,3,4")
    assert code == 0
    assert "affine permutations of the point set: 20" in out


def test_affine_duplicate_point_exits_2(capsys):
    code, _, err = run(capsys, "affine", "--field", "13", "--points", "0,1,1,6")
    assert code == 2
    assert "distinct" in err


def test_affine_json_round_trip(capsys):
    code, out, _ = run(
        capsys, "affine", "--field", "13", "--points", "0,1,4,6", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 3
    assert json.dumps(data, indent=2) == out.strip()


def test_group_paper_example(capsys):
    code, out, _ = run(
        capsys, "group", "--field", "13", "--points", "0,1,4,6", "--k", "3"
    )
    assert code == 0
    assert "permutation group order 6" in out
    assert "S_3" in out


def test_group_k1_gives_full_symmetric_group(capsys):
    code, out, _ = run(
        capsys, "group", "--field", "13", "--points", "0,1,4,6", "--k", "1"
    )
    assert code == 0
    assert "permutation group order 24" in out


def test_group_k2_affine_only(capsys):
    code, out, _ = run(
        capsys, "group", "--field", "13", "--points", "0,1,4,6", "--k", "2"
    )
    assert code == 0
    assert "permutation group order 3" in out
    assert "equal to the full group: True" in out


def test_group_json_schema(capsys):
    code, out, _ = run(
        capsys,
        "group",
        "--field",
        "13",
        "--points",
        "0,1,4,6",
        "--k",
        "3",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert set(data) == {"order", "affine_order", "equal", "elements"}
    assert data["order"] == 6 and data["affine_order"] == 3
    assert json.dumps(data, indent=2) == out.strip()


def test_group_respects_max_n(capsys):
    code, _, err = run(
        capsys,
        "group",
        "--field",
        "13",
        "--points",
        "0,1,2,3,4,5",
        "--k",
        "2",
        "--max-n",
        "4",
    )
    assert code == 2
    assert "cap" in err


def test_group_extension_field(capsys):
    code, out, _ = run(
        capsys,
        "group",
        "--field",
        "9",
        "--modulus",
        "2,2,1",
        "--points",
        "[0,0],[1,0],[2,0],[1,1],[2,2]",
        "--k",
        "2",
    )
    assert code == 0
    assert "permutation group order" in out


def test_verify_in_range(capsys):
    code, out, _ = run(
        capsys, "verify", "--field", "13", "--points", "0,1,4,6", "--k", "2"
    )
    assert code == 0
    assert "groups equal: True" in out
    assert "verified" in out


def test_verify_boundary_reports_inequality(capsys):
    code, out, _ = run(
        capsys, "verify", "--field", "13", "--points", "0,1,4,6", "--k", "3"
    )
    assert code == 0
    assert "warning" in out
    assert "groups equal: False" in out


def test_verify_full_field_f7(capsys):
    code, out, _ = run(
        capsys, "verify", "--field", "7", "--points", "0,1,2,3,4,5,6", "--k", "3"
    )
    assert code == 0
    assert "brute-force group order 42, affine group order 42" in out


def test_verify_json(capsys):
    code, out, _ = run(
        capsys,
        "verify",
        "--field",
        "13",
        "--points",
        "0,1,4,6",
        "--k",
        "2",
        "--json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["equal"] is True and data["in_range"] is True
    assert json.dumps(data, indent=2) == out.strip()


def test_verify_bad_k_exits_2(capsys):
    code, _, err = run(
        capsys, "verify", "--field", "13", "--points", "0,1,4,6", "--k", "9"
    )
    assert code == 2


def test_sweep_deterministic(capsys):
    code1, out1, _ = run(capsys, "sweep", "--seed", "42", "--trials", "5")
    code2, out2, _ = run(capsys, "sweep", "--seed", "42", "--trials", "5")
    assert code1 == code2 == 0
    assert out1 == out2
    assert "5/5 pass" in out1
    assert "seed=42" in out1


def test_sweep_zero_trials(capsys):
    code, out, _ = run(capsys, "sweep", "--trials", "0")
    assert code == 0
    assert "0/0 pass" in out


def test_sweep_json(capsys):
    code, out, _ = run(
        capsys, "sweep", "--seed", "7", "--trials", "3", "--json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["passed"] == 3 and data["failed"] == 0
    assert len(data["results"]) == 3


def test_paper_examples_pass(capsys):
    code, out, _ = run(capsys, "paper-examples")
    assert code == 0
    assert "8/8 checks pass" in out


def test_paper_examples_json(capsys):
    code, out, _ = run(capsys, "paper-examples", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["failed"] == 0
    assert len(data["checks"]) == 8


def test_invalid_field_exits_2(capsys):
    code, _, err = run(capsys, "affine", "--field", "6", "--points", "0,1")
    assert code == 2


def test_bad_point_literal_exits_2(capsys):
    code, _, err = run(capsys, "affine", "--field", "13", "--points", "0,zz")
    assert code == 2
