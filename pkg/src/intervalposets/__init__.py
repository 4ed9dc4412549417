"""Interval posets of permutations via substitution decomposition trees."""

from .perm import (
    EMPTY, Interval, Permutation, apply_symmetry, enumerate_simple, inflate, intervals,
    is_simple, parse_permutation,
)
from .decomposition import (
    DecompositionTree, Skeleton, decomposition_tree, enumerate_realizers, is_separable,
    parse_skeleton, parse_tree, realizer_count, skeleton, strong_intervals, tree_to_permutation,
)
from .poset import (
    IntervalPoset, building_block, canonical_key, is_binary, is_distributive, is_lattice,
    is_modular, is_tree_poset, meet_join, mobius_closed, mobius_generic, planar_layout,
    poset_from_skeleton, poset_of, restrict,
)
from .enumeration import (
    asymptotics, brute_force_census, count_interval_posets, count_tree_interval_posets,
    count_two_realizer, little_schroder, series_fixed_point, series_nonplane,
)
