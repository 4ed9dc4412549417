"""DOT and JSON emitters for decomposition trees and interval posets."""

from __future__ import annotations

import json

from .decomposition import DecompositionTree, Skeleton
from .perm import EMPTY, Interval, Permutation
from .poset import IntervalPoset


def _element_label(e: Interval) -> str:
    return "∅" if e.is_empty else f"[{e.lo},{e.hi}]"


def _tree_label(node) -> str:
    label = node.label if isinstance(node, DecompositionTree) else node.kind
    if isinstance(label, Permutation):
        return str(label)
    return {"P": "prime", "L": "linear"}.get(label, label)


def _dot_tree(tree: DecompositionTree | Skeleton) -> str:
    lines = ["digraph tree {", "  node [shape=plaintext];"]
    counter = 0

    def visit(node) -> str:
        nonlocal counter
        name = f"n{counter}"
        counter += 1
        if node.is_leaf:
            lines.append(f"  {name} [label=\"•\"];")
        else:
            lines.append(f"  {name} [label=\"{_tree_label(node)}\"];")
        for child in node.children:
            lines.append(f"  {name} -> {visit(child)};")
        return name

    visit(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dot_poset(P: IntervalPoset) -> str:
    index = {e: i for i, e in enumerate(P.elements)}
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for e, i in index.items():
        lines.append(f"  n{i} [label=\"{_element_label(e)}\"];")
    bottom = [f"n{index[m]}" for m in P.minimal_order]
    lines.append("  { rank=same; " + " ".join(f"{b};" for b in bottom) + " }")
    # invisible edges pin the minimal elements in left-to-right order
    for left, right in zip(bottom, bottom[1:]):
        lines.append(f"  {left} -> {right} [style=invis];")
    for a, b in sorted(P.covers, key=lambda c: (index[c[0]], index[c[1]])):
        lines.append(f"  n{index[a]} -> n{index[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(obj: DecompositionTree | Skeleton | IntervalPoset) -> str:
    if isinstance(obj, IntervalPoset):
        return _dot_poset(obj)
    return _dot_tree(obj)


def poset_to_dict(P: IntervalPoset) -> dict:
    index = {e: i for i, e in enumerate(P.elements)}
    return {
        "n": P.n,
        "variant": P.variant,
        "with_empty": P.with_empty,
        "elements": [None if e.is_empty else [e.lo, e.hi] for e in P.elements],
        "minimal_order": [index[m] for m in P.minimal_order],
        "covers": sorted([index[a], index[b]] for a, b in P.covers),
    }


def poset_to_json(P: IntervalPoset) -> str:
    return json.dumps(poset_to_dict(P))


def poset_from_json(text: str) -> IntervalPoset:
    data = json.loads(text)
    elements = tuple(EMPTY if e is None else Interval(*e) for e in data["elements"])
    return IntervalPoset(
        n=data["n"],
        elements=elements,
        minimal_order=tuple(elements[i] for i in data["minimal_order"]),
        covers=frozenset((elements[a], elements[b]) for a, b in data["covers"]),
        variant=data["variant"],
        with_empty=data["with_empty"],
    )
