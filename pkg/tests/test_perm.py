import itertools

import pytest
from hypothesis import given, strategies as st

from intervalposets.config import InfeasibleError
from intervalposets.perm import (
    Interval, Permutation, apply_symmetry, enumerate_simple, format_permutation, identity,
    inflate, intervals, is_simple, parse_permutation,
)

from oracles import brute_intervals, brute_simple

P = parse_permutation


@st.composite
def permutations(draw, max_size=9):
    n = draw(st.integers(1, max_size))
    return Permutation(tuple(draw(st.permutations(range(1, n + 1)))))


def test_parse_examples():
    assert P("456793128").values == (4, 5, 6, 7, 9, 3, 1, 2, 8)
    assert P("1").values == (1,)
    assert P("10,9,8,7,6,5,4,3,2,1").values == tuple(range(10, 0, -1))
    assert P("3 1 2") == P("312")


@pytest.mark.parametrize("bad", ["", "   ", "112", "1203", "24", "1,3", "a,b"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        P(bad)


@given(permutations(max_size=14))
def test_format_round_trip(perm):
    text = format_permutation(perm)
    assert P(text) == perm
    assert format_permutation(P(text)) == text


def test_intervals_running_example():
    ivs = intervals(P("456793128"))
    proper = {(4, 5), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7), (1, 2), (1, 3)}
    expected = {(v, v) for v in range(1, 10)} | proper | {(1, 9)}
    assert {tuple(i) for i in ivs} == expected
    assert len(ivs) == 18


def test_intervals_small():
    assert intervals(P("1")) == {Interval(1, 1)}
    assert {tuple(i) for i in intervals(P("2413"))} == {(1, 1), (2, 2), (3, 3), (4, 4), (1, 4)}


@given(permutations())
def test_intervals_match_set_definition(perm):
    assert {tuple(i) for i in intervals(perm)} == brute_intervals(perm.values)


@given(permutations())
def test_interval_count_lower_bound(perm):
    n = len(perm)
    count = len(intervals(perm))
    assert count >= n + 1 or n == 1
    if n >= 2:
        assert (count == n + 1) == (is_simple(perm) or n == 2)


@pytest.mark.parametrize("k", range(1, 10))
def test_identity_intervals(k):
    ivs = intervals(identity(k))
    assert ivs == {Interval(a, b) for a in range(1, k + 1) for b in range(a, k + 1)}
    assert len(ivs) == k * (k + 1) // 2


def test_interval_count_preserved_by_inverse():
    for n in range(1, 9):
        for values in itertools.permutations(range(1, n + 1)):
            perm = Permutation(values)
            assert len(intervals(perm)) == len(intervals(perm.inverse()))


def test_symmetries():
    assert str(apply_symmetry(P("456793128"), "inverse")) == "786123495"
    assert str(apply_symmetry(P("2413"), "reverse")) == "3142"
    assert str(apply_symmetry(P("2413"), "complement")) == "3142"
    with pytest.raises(ValueError):
        apply_symmetry(P("12"), "transpose")


@given(permutations(max_size=12))
def test_symmetries_are_involutions(perm):
    for which in ("inverse", "reverse", "complement"):
        assert apply_symmetry(apply_symmetry(perm, which), which) == perm


def test_inflate_examples():
    assert str(inflate(P("312"), [P("12"), P("231"), P("4321")])) == "892317654"
    assert str(inflate(P("1234"), [P("1"), P("3412"), P("21"), P("12")])) == "145237689"
    with pytest.raises(ValueError):
        inflate(P("12"), [P("1")])


@given(permutations())
def test_inflate_trivial_pattern(perm):
    assert inflate(P("1"), [perm]) == perm


def test_is_simple_examples():
    assert is_simple(P("2413"))
    assert is_simple(P("5247316"))
    assert not is_simple(P("123"))
    assert not is_simple(P("1"))
    assert not is_simple(P("21"))


def test_enumerate_simple():
    assert [str(p) for p in enumerate_simple(4)] == ["2413", "3142"]
    assert enumerate_simple(3) == ()
    assert enumerate_simple(1) == ()
    for k in range(1, 8):
        assert [p.values for p in enumerate_simple(k)] == brute_simple(k)
    assert len(enumerate_simple(5)) == 6


def test_enumerate_simple_bound():
    with pytest.raises(InfeasibleError):
        enumerate_simple(11)
    with pytest.raises(InfeasibleError):
        enumerate_simple(6, bound=5)
