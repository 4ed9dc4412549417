import json

import pytest

from intervalposets.cli import main, parse_interval
from intervalposets.decomposition import parse_tree, tree_to_permutation
from intervalposets.perm import EMPTY, Interval, all_permutations, format_permutation


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decompose_term(capsys):
    assert run(capsys, "decompose", "786123495", "--format", "term") == \
        (0, "3142[-[+[1,1],1],+[1,1,1,1],1,1]\n", "")


def test_decompose_skeleton_and_dot(capsys):
    code, out, _ = run(capsys, "decompose", "786123495", "--format", "skeleton")
    assert code == 0 and out == "P[L[L[1,1],1],L[1,1,1,1],1,1]\n"
    code, first, _ = run(capsys, "decompose", "2413", "--format", "dot")
    _, second, _ = run(capsys, "decompose", "2413", "--format", "dot")
    assert code == 0 and first == second and first.startswith("digraph")


def test_decompose_round_trip(capsys):
    for n in range(1, 7):
        for perm in all_permutations(n):
            code, out, _ = run(capsys, "decompose", format_permutation(perm))
            assert code == 0
            assert tree_to_permutation(parse_tree(out.strip())) == perm


def test_poset_formats(capsys):
    code, out, _ = run(capsys, "poset", "456793128", "--format", "json", "--with-empty")
    data = json.loads(out)
    assert code == 0 and data["with_empty"] and len(data["elements"]) == 19
    code, out, _ = run(capsys, "poset", "21", "--format", "text")
    assert out.splitlines()[0] == "minimal_order: {2} {1}"
    code, out, _ = run(capsys, "poset", "456793128", "--variant", "original", "--format", "dot")
    assert code == 0 and out.count("[label=") == 18


def test_realizers(capsys):
    code, out, _ = run(capsys, "realizers", "786123495")
    lines = out.split()
    assert code == 0 and len(lines) == 8 and {"342678915", "786123495"} <= set(lines)
    assert run(capsys, "realizers", "786123495", "--count-only")[1] == "8\n"


def test_realizers_over_cap(capsys):
    code, out, err = run(capsys, "realizers", "25314", "--limit", "3")
    assert code == 2 and out == "" and err


def test_check(capsys):
    code, out, _ = run(capsys, "check", "2413")
    rows = dict(line.split() for line in out.splitlines())
    assert code == 0
    assert rows == {"lattice": "true", "modular": "true", "distributive": "false", "binary": "false",
                    "tree": "true", "separable": "false", "simple": "true", "crossing_count": "0"}


def test_mobius_worked_example(capsys):
    code, out, _ = run(capsys, "mobius", "456793128", "--from", "5", "--to", "4..7", "--method", "both")
    assert code == 0 and out == "closed 0\nrecursive 0\n"
    assert run(capsys, "mobius", "2413", "--from", "empty", "--to", "1..4")[1] == "3\n"
    assert run(capsys, "mobius", "2413", "--from", "empty", "--to", "1..4", "--method", "recursive")[1] == "3\n"


def test_mobius_bad_interval(capsys):
    code, out, _ = run(capsys, "mobius", "2413", "--from", "1..2", "--to", "1..4")
    assert code == 2 and out == ""


def test_count(capsys):
    assert run(capsys, "count", "posets", "--n", "7", "--method", "formula")[1] == "1160\n"
    for method in ("formula", "series", "census"):
        assert run(capsys, "count", "tree-posets", "--n", "6", "--method", method)[1] == "78\n"
        assert run(capsys, "count", "two-realizer", "--n", "5", "--method", method)[1] == "45\n"
    for method in ("series", "census"):
        assert run(capsys, "count", "nonplane", "--n", "6", "--method", method)[1] == "43\n"
        assert run(capsys, "count", "nonplane-tree", "--n", "7", "--method", method)[1] == "32\n"


def test_count_errors(capsys):
    assert run(capsys, "count", "nonplane", "--n", "5", "--method", "formula")[0] == 1
    assert run(capsys, "count", "posets", "--n", "0")[0] == 1
    assert run(capsys, "count", "posets", "--n", "12", "--method", "census")[0] == 2


def test_asymptotics(capsys):
    code, out, _ = run(capsys, "asymptotics", "posets")
    rows = {k: float(v) for k, v in (line.split() for line in out.splitlines())}
    assert code == 0 and round(rows["tau"], 4) == 0.2708


def test_census(capsys):
    code, out, _ = run(capsys, "census", "--n", "4")
    rows = dict(line.split() for line in out.splitlines())
    assert code == 0 and rows["p"] == "12" and rows["total"] == "24"
    code, out, _ = run(capsys, "census", "--n", "4", "--json")
    assert json.loads(out)["a"] == "12"
    code, out, err = run(capsys, "census", "--n", "11")
    assert code == 2 and out == "" and err


@pytest.mark.parametrize("argv", [
    [], ["frobnicate"], ["decompose"], ["decompose", "2413", "--bogus"], ["decompose", "1123"],
    ["mobius", "2413", "--from", "3..1", "--to", "1..4"], ["poset", "12", "--format", "svg"],
])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out == "" and "usage" in err


def test_parse_interval():
    assert parse_interval("4..7") == Interval(4, 7)
    assert parse_interval("5") == Interval(5, 5)
    assert parse_interval("EMPTY") == EMPTY
    for bad in ("0", "3..2", "x"):
        with pytest.raises(ValueError):
            parse_interval(bad)
