"""Interval posets: brute-force and tree-driven construction, lattice
predicates, planar layout, and Möbius functions.

An :class:`IntervalPoset` stores value intervals ordered by inclusion plus a
plane embedding given by the left-to-right order of its minimal elements.
Two posets are equal when they agree as *embedded* posets: every element is
identified with the range of minimal-element slots below it, so posets with
different value labels but the same drawing compare equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .decomposition import (
    LINEAR, MINUS, PLUS, PRIME, SKELETON_LEAF, Skeleton, canonical_skeleton_string,
    decomposition_tree, format_skeleton, isomorphism_skeleton_string, root_blocks,
)
from .perm import EMPTY, Interval, Permutation, intervals

ORIGINAL = "original"
MODIFIED = "modified"


def _sort_key(e: Interval):
    return (len(e), e.lo)


def _cover_pairs(elements: Iterable[Interval]) -> frozenset[tuple[Interval, Interval]]:
    elems = sorted(elements, key=_sort_key)
    covers = set()
    for b in elems:
        below = [a for a in elems if a != b and a.issubset(b)]
        for a in below:
            if not any(c != a and a.issubset(c) for c in below):
                covers.add((a, b))
    return frozenset(covers)


@dataclass(frozen=True, eq=False)
class IntervalPoset:
    n: int
    elements: tuple[Interval, ...]
    minimal_order: tuple[Interval, ...]
    covers: frozenset[tuple[Interval, Interval]]
    variant: str = MODIFIED
    with_empty: bool = False

    @classmethod
    def build(cls, n: int, elements: Iterable[Interval], minimal_order: Iterable[Interval],
              variant: str = MODIFIED, with_empty: bool = False) -> IntervalPoset:
        elems = set(elements)
        if with_empty:
            elems.add(EMPTY)
        elems = tuple(sorted(elems, key=_sort_key))
        return cls(n, elems, tuple(minimal_order), _cover_pairs(elems), variant, with_empty)

    @property
    def top(self) -> Interval:
        return Interval(1, self.n)

    def __contains__(self, item) -> bool:
        return item in self._element_set

    def __len__(self) -> int:
        return len(self.elements)

    @cached_property
    def _element_set(self) -> frozenset[Interval]:
        return frozenset(self.elements)

    def leq(self, a: Interval, b: Interval) -> bool:
        return a.issubset(b)

    def lower_covers(self, b: Interval) -> list[Interval]:
        return [a for a, c in self.covers if c == b]

    def upper_covers(self, a: Interval) -> list[Interval]:
        return [c for b, c in self.covers if b == a]

    @cached_property
    def slots(self) -> dict[Interval, Interval]:
        """Map each element to the range of minimal-element slots below it."""
        slot = {m: idx for idx, m in enumerate(self.minimal_order, 1)}
        out = {}
        for e in self.elements:
            if e.is_empty:
                out[e] = EMPTY
                continue
            idx = sorted(slot[m] for m in self.minimal_order if m.issubset(e))
            if not idx or idx[-1] - idx[0] + 1 != len(idx):
                raise ValueError(f"element {e} does not sit over a contiguous run of minimal elements")
            out[e] = Interval(idx[0], idx[-1])
        return out

    @cached_property
    def shape(self):
        s = self.slots
        return (frozenset(s.values()),
                frozenset((s[a], s[b]) for a, b in self.covers),
                self.with_empty)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalPoset):
            return NotImplemented
        return self.n == other.n and self.shape == other.shape

    def __hash__(self) -> int:
        return hash((self.n, self.shape))

    def in_slots(self) -> IntervalPoset:
        """The same embedded poset with elements relabelled by slot ranges."""
        s = self.slots
        return IntervalPoset.build(self.n, s.values(), [Interval(i, i) for i in range(1, self.n + 1)],
                                   self.variant, self.with_empty)


@dataclass(frozen=True)
class LayoutPoint:
    element: Interval
    x: Fraction
    y: int


# -- construction ---------------------------------------------------------------

def poset_of(perm: Permutation, variant: str = MODIFIED, with_empty: bool = False) -> IntervalPoset:
    """Brute-force interval poset of ``perm``, independent of decomposition trees."""
    n = len(perm)
    if variant == ORIGINAL:
        order = [Interval(v, v) for v in range(1, n + 1)]
    elif variant == MODIFIED:
        order = [Interval(v, v) for v in perm]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return IntervalPoset.build(n, intervals(perm), order, variant, with_empty)


def building_block(kind: str, k: int) -> IntervalPoset:
    if k < 1:
        raise ValueError("k must be positive")
    singletons = [Interval(i, i) for i in range(1, k + 1)]
    if kind == "dual_claw":
        elements = singletons + [Interval(1, k)]
    elif kind == "argyle":
        elements = [Interval(a, b) for a in range(1, k + 1) for b in range(a, k + 1)]
    else:
        raise ValueError(f"unknown building block {kind!r}")
    return IntervalPoset.build(k, elements, singletons)


def _procedure_elements(node: Skeleton, offset: int, out: list[Interval]) -> int:
    """Append the slot ranges contributed by ``node`` (first slot is
    ``offset + 1``) and return its number of leaves."""
    if node.is_leaf:
        out.append(Interval(offset + 1, offset + 1))
        return 1
    spans = []
    pos = offset
    for child in node.children:
        size = _procedure_elements(child, pos, out)
        spans.append((pos + 1, pos + size))
        pos += size
    # child maxima play the role of the block's minimal elements
    if node.kind == PRIME:
        out.append(Interval(offset + 1, pos))
    else:
        k = len(spans)
        for a in range(k):
            for b in range(a + 1, k):
                out.append(Interval(spans[a][0], spans[b][1]))
    return pos - offset


def poset_from_skeleton(skel: Skeleton, with_empty: bool = False) -> IntervalPoset:
    """Assemble the modified interval poset by substituting dual claws (prime
    nodes) and argyle posets (linear nodes) into each other."""
    elements: list[Interval] = []
    n = _procedure_elements(skel, 0, elements)
    return IntervalPoset.build(n, elements, [Interval(i, i) for i in range(1, n + 1)],
                               MODIFIED, with_empty)


def skeleton_of_poset(P: IntervalPoset) -> Skeleton:
    """Recover the skeleton whose procedure output is ``P``.

    Raises ValueError if ``P`` is not the interval poset of any permutation.
    """
    ranges = {r for r in P.slots.values() if not r.is_empty}
    n = P.n
    if Interval(1, n) not in ranges or any(Interval(i, i) not in ranges for i in range(1, n + 1)):
        raise ValueError("not an interval poset: missing a trivial element")
    strong = [r for r in ranges if not any(r.overlaps(o) for o in ranges)]
    strong.sort(key=lambda r: (r.lo, -r.hi))

    def build(r: Interval, inner: list[Interval]) -> Skeleton:
        if r.lo == r.hi:
            return SKELETON_LEAF
        children: list[tuple[Interval, list[Interval]]] = []
        for s in inner:
            if children and s.issubset(children[-1][0]):
                children[-1][1].append(s)
            else:
                children.append((s, []))
        k = len(children)
        heads = [c for c, _ in children]
        unions = [Interval(heads[a].lo, heads[b].hi) for a in range(k) for b in range(a + 1, k)]
        present = sum(u in ranges for u in unions)
        if k == 2 or present == len(unions):
            kind = LINEAR
        elif present == 1 and k >= 4:
            kind = PRIME
        else:
            raise ValueError("not an interval poset: a block is neither prime nor linear")
        return Skeleton(kind, tuple(build(c, sub) for c, sub in children))

    skel = build(strong[0], strong[1:])
    if poset_from_skeleton(skel, P.with_empty) != P:
        raise ValueError("not an interval poset")
    return skel


def canonical_key(P: IntervalPoset, plane: bool = True) -> str:
    """Skeleton term of ``P``; with ``plane=False`` every child list is sorted.

    The non-plane key treats the blocks under a linear node as a multiset, as
    in the multiset specification counted by ``series_nonplane``.  It is
    coarser than abstract isomorphism from four minimal elements on; see
    :func:`isomorphism_key` for the exact invariant.
    """
    skel = skeleton_of_poset(P)
    return format_skeleton(skel) if plane else canonical_skeleton_string(skel)


def isomorphism_key(P: IntervalPoset) -> str:
    """Equal for two interval posets exactly when they are isomorphic as posets."""
    return isomorphism_skeleton_string(skeleton_of_poset(P))


# -- lattice structure ------------------------------------------------------------

def meet_join(P: IntervalPoset, a: Interval, b: Interval) -> tuple[Interval | None, Interval | None]:
    """Greatest lower bound and least upper bound of ``a`` and ``b`` (None if absent)."""
    lower = [c for c in P.elements if c.issubset(a) and c.issubset(b)]
    upper = [c for c in P.elements if a.issubset(c) and b.issubset(c)]
    meet = [c for c in lower if all(d.issubset(c) for d in lower)]
    join = [c for c in upper if all(c.issubset(d) for d in upper)]
    return (meet[0] if meet else None, join[0] if join else None)


def _tables(P: IntervalPoset):
    meets, joins = {}, {}
    for a in P.elements:
        for b in P.elements:
            meets[a, b], joins[a, b] = meet_join(P, a, b)
    return meets, joins


def is_lattice(P: IntervalPoset) -> bool:
    meets, joins = _tables(P)
    return None not in meets.values() and None not in joins.values()


def _lattice_tables(P: IntervalPoset):
    meets, joins = _tables(P)
    if None in meets.values() or None in joins.values():
        raise ValueError("poset is not a lattice")
    return meets, joins


def is_modular(P: IntervalPoset) -> bool:
    meets, joins = _lattice_tables(P)
    covers = P.covers
    for a in P.elements:
        for b in P.elements:
            m, j = meets[a, b], joins[a, b]
            both_cover_meet = (m, a) in covers and (m, b) in covers
            join_covers_both = (a, j) in covers and (b, j) in covers
            if both_cover_meet != join_covers_both:
                return False
    return True


def is_distributive(P: IntervalPoset) -> bool:
    meets, joins = _lattice_tables(P)
    E = P.elements
    for a in E:
        for b in E:
            for c in E:
                if meets[a, joins[b, c]] != joins[meets[a, b], meets[a, c]]:
                    return False
    return True


def is_binary(P: IntervalPoset) -> bool:
    return all(node.kind != PRIME for node, _ in skeleton_of_poset(P).nodes())


def is_tree_poset(P: IntervalPoset) -> bool:
    return all(not (node.kind == LINEAR and len(node.children) >= 3)
               for node, _ in skeleton_of_poset(P).nodes())


# -- planar layout ------------------------------------------------------------------

def planar_layout(P: IntervalPoset) -> tuple[list[LayoutPoint], int]:
    """Place each element at (midpoint of its slot range, cardinality)."""
    points = {}
    for e, r in P.slots.items():
        if r.is_empty:
            points[e] = LayoutPoint(e, Fraction(P.n + 1, 2), 0)
        else:
            points[e] = LayoutPoint(e, Fraction(r.lo + r.hi, 2), len(r))
    segments = [((points[a].x, points[a].y), (points[b].x, points[b].y)) for a, b in sorted(P.covers)]
    return [points[e] for e in P.elements], crossing_count(segments)


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def crossing_count(segments) -> int:
    """Count segment pairs meeting anywhere other than a shared endpoint."""
    count = 0
    for idx, (p1, p2) in enumerate(segments):
        for q1, q2 in segments[idx + 1:]:
            shared = {p1, p2} & {q1, q2}
            o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
            o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
            if shared:
                # only a collinear overlap beyond the shared endpoint counts
                if o1 == o2 == o3 == o4 == 0 and len(shared) == 1:
                    (s,) = shared
                    a = p2 if p1 == s else p1
                    b = q2 if q1 == s else q1
                    if (a[0] - s[0]) * (b[0] - s[0]) + (a[1] - s[1]) * (b[1] - s[1]) > 0:
                        count += 1
                continue
            if o1 != o2 and o3 != o4:
                count += 1
            elif (o1 == 0 and _on_segment(p1, p2, q1)) or (o2 == 0 and _on_segment(p1, p2, q2)) \
                    or (o3 == 0 and _on_segment(q1, q2, p1)) or (o4 == 0 and _on_segment(q1, q2, p2)):
                count += 1
    return count


# -- Möbius function ----------------------------------------------------------------

def mobius_generic(P: IntervalPoset, a: Interval, b: Interval, memo: dict | None = None) -> int:
    """Top-down recursion mu(a, b) = -sum(mu(x, b) for a < x <= b)."""
    if a not in P or b not in P:
        raise ValueError(f"{a} or {b} is not an element of the poset")
    if not a.issubset(b):
        return 0
    if memo is None:
        memo = {}
    between = [x for x in P.elements if a.issubset(x) and x.issubset(b)]

    def mu(x: Interval) -> int:
        key = (x, b)
        if key not in memo:
            if x == b:
                memo[key] = 1
            else:
                memo[key] = -sum(mu(y) for y in between if y != x and x.issubset(y))
        return memo[key]

    return mu(a)


def restrict(perm: Permutation, J: Interval) -> Permutation:
    """The pattern formed by the entries of ``perm`` whose values lie in ``J``."""
    if J.is_empty or J not in intervals(perm):
        raise ValueError(f"{J} is not an interval of {perm}")
    return Permutation(tuple(v - J.lo + 1 for v in perm if J.lo <= v <= J.hi))


def _hull(blocks: list[Interval]) -> Interval:
    return Interval(min(b.lo for b in blocks), max(b.hi for b in blocks))


def _mobius_to_top(perm: Permutation, I: Interval) -> int:
    n = len(perm)
    if I == Interval(1, n):
        return 1
    if n == 1:
        return -1  # the empty interval is the only coatom
    blocks = root_blocks(perm)
    k = len(blocks)
    if decomposition_tree(perm).label in (PLUS, MINUS) and k >= 3:
        if I == _hull(blocks[:-1]) or I == _hull(blocks[1:]):
            return -1
        if I == _hull(blocks[1:-1]):
            return 1
        return 0
    if I in blocks:
        return -1
    if I.is_empty:
        return k - 1
    return 0


def mobius_closed(perm: Permutation, I: Interval, J: Interval) -> int:
    """Möbius function of the modified poset with empty minimum, read off the
    decomposition tree rather than summed over the poset."""
    ivs = intervals(perm)
    if not I.is_empty and I not in ivs:
        raise ValueError(f"{I} is not an interval of {perm}")
    if not J.is_empty and J not in ivs:
        raise ValueError(f"{J} is not an interval of {perm}")
    if J.is_empty:
        return 1 if I.is_empty else 0
    if not I.issubset(J):
        return 0
    n = len(perm)
    if J != Interval(1, n):
        shift = J.lo - 1
        tau = restrict(perm, J)
        I = I if I.is_empty else Interval(I.lo - shift, I.hi - shift)
        return _mobius_to_top(tau, I)
    return _mobius_to_top(perm, I)
