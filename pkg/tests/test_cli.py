import io
import json

import pytest

from rookpaths.cli import run


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


def plain_and_json(argv):
    code_p, out_p, _ = invoke(argv)
    code_j, out_j, _ = invoke(argv + ["--json"])
    assert code_p == code_j == 0
    return out_p, json.loads(out_j)


# ----------------------------------------------------------------- counting


def test_paths_count_value_and_json():
    plain, payload = plain_and_json(["paths-count", "--dir", "dec", "--heights", "4,2"])
    assert plain.strip() == "12"
    assert payload == {
        "input": {"dir": "dec", "heights": [4, 2]},
        "method": "iterative",
        "value": "12",
    }


def test_paths_count_methods_agree():
    for direction, heights, expected in [("dec", "5,3,2", "37"), ("inc", "1,2,4", "19")]:
        for method in ["auto", "iterative", "determinant", "oracle"]:
            code, out, _ = invoke(
                ["paths-count", "--dir", direction, "--heights", heights,
                 "--method", method, "--check"]
            )
            assert code == 0
            assert out.strip() == expected


def test_paths_count_auto_resolves_by_direction():
    _, payload = plain_and_json(["paths-count", "--dir", "inc", "--heights", "1,2"])
    assert payload["method"] == "determinant"
    assert payload["value"] == "5"


def test_paths_list_output():
    plain, payload = plain_and_json(
        ["paths-list", "--dir", "dec", "--heights", "2,1", "--cap", "10"]
    )
    lines = [line for line in plain.splitlines() if line]
    assert lines == ["0,0", "1,0", "1,1", "2,0", "2,1"]
    assert payload["items"] == [[0, 0], [1, 0], [1, 1], [2, 0], [2, 1]]
    assert payload["truncated"] is False


def test_paths_list_truncation():
    code, out, err = invoke(["paths-list", "--dir", "dec", "--heights", "3,1", "--cap", "2"])
    assert code == 0
    assert out.splitlines() == ["0,0", "1,0"]
    assert "truncated" in err
    _, payload = plain_and_json(["paths-list", "--dir", "dec", "--heights", "3,1", "--cap", "2"])
    assert payload["truncated"] is True


# --------------------------------------------------------------- dimensions


def test_dim_subset_value():
    plain, payload = plain_and_json(["dim-subset", "--n", "8", "--set", "2,4,6"])
    assert plain.strip() == "14"
    assert payload == {
        "input": {"n": 8, "set": [2, 4, 6]},
        "method": "iterative",
        "value": "14",
    }


def test_dim_subset_methods_and_check():
    for method in ["auto", "iterative", "determinant", "oracle"]:
        code, out, _ = invoke(
            ["dim-subset", "--n", "8", "--set", "2,4,6", "--method", method, "--check"]
        )
        assert code == 0 and out.strip() == "14"
    code, out, _ = invoke(["dim-subset", "--n", "5", "--set", "", "--method", "determinant"])
    assert code == 0 and out.strip() == "1"


def test_dim_vector_value():
    vector = "1:{};1:{3};1:{4,7};1:{5,6};1:{1,2,3}"
    plain, payload = plain_and_json(["dim-vector", "--n", "7", "--vector", vector])
    assert plain.strip() == "24"
    assert payload["value"] == "24"
    code, out, _ = invoke(
        ["dim-vector", "--n", "7", "--vector", vector, "--method", "oracle", "--check"]
    )
    assert code == 0 and out.strip() == "24"


def test_reduce_output():
    vector = "1:{};-2:{1};1:{3};5:{1,2};3:{4,7};-2:{5,6};1:{1,2,3}"
    plain, payload = plain_and_json(["reduce", "--n", "7", "--vector", vector])
    assert plain.strip() == "1:{};1:{3};1:{4,7};1:{5,6};1:{1,2,3}"
    assert payload["reduced_form"] == plain.strip()
    assert payload["reduced_support"] == [[], [3], [4, 7], [5, 6], [1, 2, 3]]


# ------------------------------------------------------------------- monoid


def test_monoid_size():
    plain, payload = plain_and_json(["monoid-size", "--n", "2"])
    assert plain.strip() == "5"
    assert payload == {"input": {"n": 2}, "value": "5"}


def test_monoid_list():
    plain, payload = plain_and_json(["monoid-list", "--n", "2", "--cap", "100"])
    assert len(payload["items"]) == 5
    assert payload["truncated"] is False
    assert plain.splitlines() == payload["items"]
    assert "/" in payload["items"][0]
    _, payload = plain_and_json(["monoid-list", "--n", "3", "--cap", "4"])
    assert len(payload["items"]) == 4 and payload["truncated"] is True


def test_monoid_compose():
    plain, payload = plain_and_json(
        ["monoid-compose", "--n", "3", "--f", "2 3 / 1 2", "--g", "1 2 / 1 2"]
    )
    assert plain.strip() == "2 / 1"
    assert payload["value"] == "2 / 1"


# ------------------------------------------------------------------- verify


def test_verify_cor35():
    plain, payload = plain_and_json(["verify", "--identity", "cor35", "--k", "4"])
    assert plain.strip() == "lhs=42 rhs=42 equal=true"
    assert payload == {
        "input": {"identity": "cor35", "k": 4},
        "lhs": "42",
        "rhs": "42",
        "equal": True,
    }


def test_verify_cor34_and_hockey():
    plain, payload = plain_and_json(["verify", "--identity", "cor34", "--heights", "4,2"])
    assert plain.strip() == "lhs=12 rhs=12 equal=true"
    assert payload["equal"] is True
    plain, payload = plain_and_json(
        ["verify", "--identity", "hockey", "--a", "2", "--b", "3", "--p", "1"]
    )
    assert plain.strip() == "lhs=9 rhs=9 equal=true"
    assert payload["lhs"] == payload["rhs"] == "9"


# --------------------------------------------------------------- exit codes


def test_usage_errors_exit_1():
    for argv in [
        [],
        ["no-such-command"],
        ["paths-count", "--nope"],
        ["paths-count", "--dir", "sideways", "--heights", "1"],
        ["paths-count", "--dir", "dec"],
        ["dim-subset", "--n", "-3", "--set", "1"],
        ["dim-vector", "--n", "4", "--vector", "1:{1}", "--method", "determinant"],
        ["verify", "--identity", "cor35"],
        ["verify", "--identity", "cor34"],
        ["verify", "--identity", "hockey", "--a", "1"],
    ]:
        code, _, err = invoke(argv)
        assert code == 1, argv
        assert err


def test_domain_errors_exit_2():
    for argv in [
        ["paths-count", "--dir", "dec", "--heights", "1,5"],
        ["paths-count", "--dir", "dec", "--heights", "4,x"],
        ["paths-count", "--dir", "dec", "--heights", ""],
        ["paths-list", "--dir", "dec", "--heights", "1", "--cap", "0"],
        ["dim-subset", "--n", "8", "--set", "3,3"],
        ["dim-subset", "--n", "4", "--set", "9"],
        ["dim-vector", "--n", "7", "--vector", "1:{1"],
        ["dim-vector", "--n", "17", "--vector", "1:{1}", "--method", "oracle"],
        ["monoid-size", "--n", "0"],
        ["monoid-size", "--n", "99"],
        ["monoid-compose", "--n", "3", "--f", "1 1 / 1 2", "--g", "/"],
        ["verify", "--identity", "cor35", "--k", "1"],
        ["verify", "--identity", "cor34", "--heights", "3"],
    ]:
        code, _, err = invoke(argv)
        assert code == 2, argv
        assert err


def test_no_crash_on_weird_input():
    code, _, err = invoke(["paths-count", "--dir", "dec", "--heights", ",,,"])
    assert code == 2 and err


def test_check_never_mismatches_on_exhaustive_ranges():
    from itertools import combinations

    from rookpaths import HeightSequence, iter_below

    for k in range(1, 7):
        for lam in iter_below(HeightSequence.decreasing((6,) * k)):
            heights = ",".join(str(x) for x in lam.heights)
            code, _, err = invoke(
                ["paths-count", "--dir", "dec", "--heights", heights, "--check"]
            )
            assert code == 0 and not err, lam
    for k in range(1, 9):
        for elems in combinations(range(1, 9), k):
            subset = ",".join(str(x) for x in elems)
            code, _, err = invoke(
                ["dim-subset", "--n", "8", "--set", subset, "--method", "determinant", "--check"]
            )
            assert code == 0 and not err, elems
