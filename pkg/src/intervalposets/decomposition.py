"""Strong intervals, substitution decomposition trees and their skeletons.

Trees are built from the strong intervals of a permutation (intervals that
overlap no other interval), nested by inclusion; each internal node is
labelled by the pattern formed by its children.  Term syntax::

    3142[-[+[1,1],1],+[1,1,1,1],1,1]     decomposition tree
    P[L[L[1,1],1],L[1,1,1,1],1,1]        skeleton
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .config import DEFAULT_LIMITS, InfeasibleError
from .perm import (
    Interval, Permutation, decreasing, enumerate_simple, identity, inflate,
    interval_windows, is_simple, parse_permutation,
)

PLUS = "+"
MINUS = "-"
PRIME = "P"
LINEAR = "L"

Label = Union[str, Permutation]


@dataclass(frozen=True)
class DecompositionTree:
    label: Label | None = None
    children: tuple[DecompositionTree, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.label is None

    @property
    def size(self) -> int:
        if self.label is None:
            return 1
        return sum(c.size for c in self.children)

    def __str__(self) -> str:
        return format_tree(self)


@dataclass(frozen=True)
class Skeleton:
    kind: str | None = None
    children: tuple[Skeleton, ...] = ()

    @property
    def is_leaf(self) -> bool:
        return self.kind is None

    @property
    def size(self) -> int:
        if self.kind is None:
            return 1
        return sum(c.size for c in self.children)

    def nodes(self):
        """Yield ``(node, parent)`` in preorder."""
        stack = [(self, None)]
        while stack:
            node, parent = stack.pop()
            yield node, parent
            stack.extend((c, node) for c in reversed(node.children))

    def __str__(self) -> str:
        return format_skeleton(self)


LEAF = DecompositionTree()
SKELETON_LEAF = Skeleton()


# -- strong intervals ---------------------------------------------------------

def _strong_windows(values: tuple[int, ...]) -> list[tuple[int, int, int, int]]:
    windows = list(interval_windows(values))
    strong = []
    for w in windows:
        i, j = w[0], w[1]
        for x in windows:
            a, b = x[0], x[1]
            # overlap in positions is equivalent to overlap in values
            if (a < i <= b < j) or (i < a <= j < b):
                break
        else:
            strong.append(w)
    return strong


def strong_intervals(perm: Permutation) -> frozenset[Interval]:
    return frozenset(Interval(lo, hi) for _, _, lo, hi in _strong_windows(perm.values))


class _Block:
    __slots__ = ("i", "j", "lo", "hi", "children")

    def __init__(self, i, j, lo, hi):
        self.i, self.j, self.lo, self.hi = i, j, lo, hi
        self.children: list[_Block] = []


def _block_tree(values: tuple[int, ...]) -> _Block:
    strong = sorted(_strong_windows(values), key=lambda w: (w[0], -w[1]))
    root = _Block(*strong[0])
    stack = [root]
    for w in strong[1:]:
        block = _Block(*w)
        while stack[-1].j < block.i:
            stack.pop()
        stack[-1].children.append(block)
        stack.append(block)
    return root


def _pattern(los: list[int]) -> tuple[int, ...]:
    ranks = {v: r for r, v in enumerate(sorted(los), 1)}
    return tuple(ranks[v] for v in los)


def _to_tree(block: _Block) -> DecompositionTree:
    if not block.children:
        return LEAF
    children = tuple(_to_tree(c) for c in block.children)
    pattern = _pattern([c.lo for c in block.children])
    k = len(pattern)
    if pattern == tuple(range(1, k + 1)):
        label: Label = PLUS
    elif pattern == tuple(range(k, 0, -1)):
        label = MINUS
    else:
        label = Permutation(pattern)
    return DecompositionTree(label, children)


@lru_cache(maxsize=65536)
def decomposition_tree(perm: Permutation) -> DecompositionTree:
    return _to_tree(_block_tree(perm.values))


def root_blocks(perm: Permutation) -> list[Interval]:
    """Value ranges of the children of the root of ``T(perm)``, left to right."""
    return [Interval(c.lo, c.hi) for c in _block_tree(perm.values).children]


# -- trees back to permutations ----------------------------------------------

def check_tree(tree: DecompositionTree) -> None:
    """Raise ValueError unless ``tree`` is a valid decomposition tree."""
    stack = [(tree, None)]
    while stack:
        node, parent_label = stack.pop()
        if node.is_leaf:
            if node.children:
                raise ValueError("leaf with children")
            continue
        k = len(node.children)
        if node.label in (PLUS, MINUS):
            if k < 2:
                raise ValueError(f"{node.label} node with {k} children")
            if node.label == parent_label:
                raise ValueError(f"forbidden {node.label}-{node.label} edge")
        elif isinstance(node.label, Permutation):
            if len(node.label) != k:
                raise ValueError(f"label {node.label} has arity {len(node.label)}, node has {k} children")
            if not is_simple(node.label):
                raise ValueError(f"label {node.label} is not simple")
        else:
            raise ValueError(f"bad label {node.label!r}")
        stack.extend((c, node.label) for c in node.children)


def _inflate_tree(tree: DecompositionTree) -> Permutation:
    if tree.is_leaf:
        return Permutation((1,))
    k = len(tree.children)
    if tree.label == PLUS:
        pattern = identity(k)
    elif tree.label == MINUS:
        pattern = decreasing(k)
    else:
        pattern = tree.label
    return inflate(pattern, [_inflate_tree(c) for c in tree.children])


def tree_to_permutation(tree: DecompositionTree) -> Permutation:
    check_tree(tree)
    return _inflate_tree(tree)


# -- skeletons ----------------------------------------------------------------

def skeleton(tree: DecompositionTree) -> Skeleton:
    if tree.is_leaf:
        return SKELETON_LEAF
    kind = LINEAR if tree.label in (PLUS, MINUS) else PRIME
    return Skeleton(kind, tuple(skeleton(c) for c in tree.children))


def is_separable(perm: Permutation) -> bool:
    stack = [decomposition_tree(perm)]
    while stack:
        node = stack.pop()
        if isinstance(node.label, Permutation):
            return False
        stack.extend(node.children)
    return True


def realizer_count(skel: Skeleton, bound: int | None = None) -> int:
    count = 1
    for node, parent in skel.nodes():
        if node.kind == PRIME:
            count *= len(enumerate_simple(len(node.children), bound))
        elif node.kind == LINEAR and not (parent is not None and parent.kind == LINEAR):
            count *= 2
    return count


def enumerate_realizers(skel: Skeleton, cap: int | None = None,
                        bound: int | None = None) -> list[Permutation]:
    """All permutations whose decomposition tree has skeleton ``skel``.

    Ordered lexicographically by label assignment: internal nodes in preorder,
    ``+`` before ``-``, simple labels in lexicographic order.
    """
    if cap is None:
        cap = DEFAULT_LIMITS.realizer_cap
    total = realizer_count(skel, bound)
    if total > cap:
        raise InfeasibleError(f"{total} realizers exceed the output cap {cap}")
    free: list[tuple[Label, ...]] = []
    for node, parent in skel.nodes():
        if node.kind == PRIME:
            free.append(enumerate_simple(len(node.children), bound))
        elif node.kind == LINEAR and (parent is None or parent.kind != LINEAR):
            free.append((PLUS, MINUS))

    def build(node: Skeleton, parent_label, labels) -> DecompositionTree:
        if node.is_leaf:
            return LEAF
        if node.kind == LINEAR and parent_label in (PLUS, MINUS):
            label = MINUS if parent_label == PLUS else PLUS
        else:
            label = next(labels)
        return DecompositionTree(label, tuple(build(c, label, labels) for c in node.children))

    return [_inflate_tree(build(skel, None, iter(choice))) for choice in itertools.product(*free)]


# -- term syntax --------------------------------------------------------------

def _format_label(label: Label) -> str:
    if isinstance(label, Permutation):
        # commas separate children, so long labels are written with spaces
        return str(label) if len(label) <= 9 else " ".join(map(str, label))
    return label


def format_tree(tree: DecompositionTree) -> str:
    if tree.is_leaf:
        return "1"
    return _format_label(tree.label) + "[" + ",".join(format_tree(c) for c in tree.children) + "]"


def format_skeleton(skel: Skeleton) -> str:
    if skel.is_leaf:
        return "1"
    return skel.kind + "[" + ",".join(format_skeleton(c) for c in skel.children) + "]"


def canonical_skeleton_string(skel: Skeleton) -> str:
    """Skeleton term with every child list sorted (non-plane canonical form)."""
    if skel.is_leaf:
        return "1"
    return skel.kind + "[" + ",".join(sorted(canonical_skeleton_string(c) for c in skel.children)) + "]"


def isomorphism_skeleton_string(skel: Skeleton) -> str:
    """Skeleton term up to abstract poset isomorphism.

    Prime children are interchangeable; linear children form a sequence whose
    only symmetry is reversal.  This is finer than sorting all child lists.
    """
    if skel.is_leaf:
        return "1"
    parts = [isomorphism_skeleton_string(c) for c in skel.children]
    if skel.kind == PRIME:
        parts.sort()
    else:
        parts = min(parts, parts[::-1])
    return skel.kind + "[" + ",".join(parts) + "]"


class _TermParser:
    def __init__(self, text: str):
        self.text = text.strip()
        self.pos = 0

    def fail(self, msg: str):
        raise ValueError(f"{msg} at offset {self.pos} in {self.text!r}")

    def parse(self, node_fn):
        node = self.node(node_fn)
        if self.pos != len(self.text):
            self.fail("trailing input")
        return node

    def node(self, node_fn):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in "[],":
            self.pos += 1
        head = self.text[start:self.pos].strip()
        if self.pos < len(self.text) and self.text[self.pos] == "[":
            self.pos += 1
            children = [self.node(node_fn)]
            while self.pos < len(self.text) and self.text[self.pos] == ",":
                self.pos += 1
                children.append(self.node(node_fn))
            if self.pos >= len(self.text) or self.text[self.pos] != "]":
                self.fail("expected ']'")
            self.pos += 1
            return node_fn(head, tuple(children))
        if head != "1":
            self.fail(f"expected leaf '1', got {head!r}")
        return node_fn(None, ())


def parse_tree(text: str) -> DecompositionTree:
    def make(head, children):
        if head is None:
            return LEAF
        if head in (PLUS, MINUS):
            return DecompositionTree(head, children)
        return DecompositionTree(parse_permutation(head), children)

    return _TermParser(text).parse(make)


def parse_skeleton(text: str) -> Skeleton:
    def make(head, children):
        if head is None:
            return SKELETON_LEAF
        if head not in (PRIME, LINEAR):
            raise ValueError(f"skeleton node kind must be P or L, got {head!r}")
        return Skeleton(head, children)

    skel = _TermParser(text).parse(make)
    for node, _ in skel.nodes():
        if node.kind == PRIME and len(node.children) < 4:
            raise ValueError("prime node with fewer than 4 children")
        if node.kind == LINEAR and len(node.children) < 2:
            raise ValueError("linear node with fewer than 2 children")
    return skel
