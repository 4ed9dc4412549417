import math

import pytest
from hypothesis import given, settings, strategies as st

from intervalposets.config import InfeasibleError
from intervalposets.decomposition import decomposition_tree, is_separable, skeleton
from intervalposets.enumeration import (
    asymptotics, brute_force_census, count_interval_posets, count_tree_interval_posets,
    count_two_realizer, large_schroder, little_schroder, nonplane_growth, plane_key,
    separable_skeleton_series, series_fixed_point, series_nonplane,
)
from intervalposets.perm import all_permutations, parse_permutation

from oracles import direct_poset_formula, direct_tree_formula

P_SEQ = [1, 1, 3, 12, 52, 240, 1160, 5795, 29681]
T_SEQ = [1, 1, 2, 6, 21, 78, 301, 1198, 4888]


def test_closed_formula_sequences():
    assert [count_interval_posets(n) for n in range(1, 10)] == P_SEQ
    assert [count_tree_interval_posets(n) for n in range(1, 10)] == T_SEQ


def test_closed_formulas_match_direct_binomials():
    for n in list(range(1, 80)) + [200, 400]:
        assert count_interval_posets(n) == direct_poset_formula(n)
        assert count_tree_interval_posets(n) == direct_tree_formula(n)


def test_closed_formula_rejects_nonpositive():
    with pytest.raises(ValueError):
        count_interval_posets(0)
    with pytest.raises(ValueError):
        count_tree_interval_posets(-1)


def test_series_match_formulas():
    N = 60
    p = series_fixed_point("posets", N)
    t = series_fixed_point("tree-posets", N)
    assert p[0] == t[0] == 0
    for n in range(1, N + 1):
        assert p[n] == count_interval_posets(n)
        assert t[n] == count_tree_interval_posets(n)


def test_series_json_is_decimal_strings():
    out = series_fixed_point("posets", 5).to_json()
    assert out == ["0", "1", "1", "3", "12", "52"]


def test_tree_posets_are_a_subfamily():
    for n in range(1, 40):
        assert count_tree_interval_posets(n) <= count_interval_posets(n)


def test_nonplane_series_prefix():
    assert list(series_nonplane("posets", 8).coeffs[1:]) == [1, 1, 2, 6, 15, 43, 124, 379]
    assert list(series_nonplane("tree_posets", 8).coeffs[1:]) == [1, 1, 1, 3, 6, 14, 32, 79]


def test_nonplane_bounded_by_plane():
    q = series_nonplane("posets", 50)
    qt = series_nonplane("tree_posets", 50)
    for n in range(1, 51):
        assert qt[n] <= q[n] <= count_interval_posets(n)
        assert qt[n] <= count_tree_interval_posets(n)


def test_schroder_numbers():
    assert [large_schroder(m) for m in range(7)] == [1, 2, 6, 22, 90, 394, 1806]
    assert [little_schroder(n) for n in range(1, 8)] == [1, 1, 3, 11, 45, 197, 903]
    with pytest.raises(ValueError):
        large_schroder(-1)


def test_schroder_counts_separable_permutations():
    for n in range(1, 9):
        separable = sum(is_separable(p) for p in all_permutations(n))
        assert separable == large_schroder(n - 1)


def test_separable_skeleton_series_is_little_schroder():
    s = separable_skeleton_series(30)
    assert all(s[n] == little_schroder(n) for n in range(1, 31))


def test_two_realizer_counts():
    assert [count_two_realizer(n) for n in range(1, 8)] == [0, 1, 3, 12, 45, 197, 903]
    for n in range(5, 40):
        assert count_two_realizer(n) == little_schroder(n)


@pytest.mark.parametrize("family", ["posets", "tree_posets"])
def test_asymptotics_consistent_with_exact_counts(family):
    data = asymptotics(family)
    assert 0 < data.rho < data.tau < 1
    assert data.residual <= 1e-10
    assert math.isclose(data.growth_constant, 1 / data.rho)
    count = count_interval_posets if family == "posets" else count_tree_interval_posets

    def ratio(n):
        log_estimate = math.log(data.stanley_constant) + n * math.log(data.growth_constant) - 1.5 * math.log(n)
        return math.exp(math.log(count(n)) - log_estimate)

    errors = [abs(ratio(n) - 1) for n in (100, 300, 400)]
    assert errors[0] > errors[1] > errors[2]
    assert errors[2] < 0.01


def test_nonplane_growth_is_below_plane_growth():
    for family, plane in (("posets", "posets"), ("tree_posets", "tree_posets")):
        g = nonplane_growth(family, N=200)
        assert 1 < g.ratio < asymptotics(plane).growth_constant
        assert g.amplitude > 0


def test_plane_key_matches_skeleton():
    assert plane_key(parse_permutation("786123495")) == "P[L[L[1,1],1],L[1,1,1,1],1,1]"


@pytest.mark.parametrize("n, p, q, t, a", [
    (1, 1, 1, 1, 0), (2, 1, 1, 1, 1), (3, 3, 2, 2, 3), (4, 12, 6, 6, 12), (5, 52, 15, 21, 45),
    (6, 240, 43, 78, 197),
])
def test_census_small(n, p, q, t, a):
    c = brute_force_census(n)
    assert (c.p, c.q, c.t, c.a) == (p, q, t, a)
    assert c.total == math.factorial(n)
    assert c.q_tree == series_nonplane("tree_posets", n)[n]


def test_census_class_sizes_match_realizer_counts():
    from intervalposets.decomposition import parse_skeleton, realizer_count
    c = brute_force_census(6)
    for key, size in c.class_sizes.items():
        assert realizer_count(parse_skeleton(key)) == size


def test_census_parallel_matches_serial():
    serial, parallel = brute_force_census(6), brute_force_census(6, workers=2)
    assert serial.class_sizes == parallel.class_sizes


def test_census_json_uses_strings():
    data = brute_force_census(3).to_json()
    assert data["p"] == "3" and data["total"] == "6"
    assert all(isinstance(v, str) for v in data["class_sizes"].values())


def test_census_bounds():
    with pytest.raises(InfeasibleError):
        brute_force_census(10)
    with pytest.raises(InfeasibleError):
        brute_force_census(0)
    with pytest.raises(InfeasibleError):
        brute_force_census(6, max_n=5)


@settings(max_examples=10, deadline=None)
@given(st.integers(1, 400))
def test_formulas_integral(n):
    # any remainder in the exact division would raise
    assert count_interval_posets(n) > 0
    assert count_tree_interval_posets(n) > 0


def test_skeleton_classes_partition_permutations():
    for n in range(1, 7):
        keys = {plane_key(p) for p in all_permutations(n)}
        assert len(keys) == count_interval_posets(n)
        assert all(plane_key(p) == plane_key(p.complement()) for p in all_permutations(n))
        assert len({skeleton(decomposition_tree(p)) for p in all_permutations(n)}) == len(keys)
