"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 computation error.  Payloads go to
stdout only when the whole command succeeded; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import enumeration as en
from .config import DEFAULT_LIMITS
from .decomposition import decomposition_tree, format_skeleton, format_tree, is_separable, realizer_count, \
    enumerate_realizers, skeleton
from .export import emit_dot, poset_to_json
from .perm import EMPTY, Interval, is_simple, parse_permutation
from .poset import (
    MODIFIED, is_binary, is_distributive, is_lattice, is_modular, is_tree_poset, mobius_closed,
    mobius_generic, planar_layout, poset_of,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def parse_interval(text: str) -> Interval:
    """``a..b``, a single value ``a``, or ``empty``."""
    text = text.strip()
    if text.lower() == "empty":
        return EMPTY
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise ValueError(f"bad interval {text!r}")
    return Interval(lo, hi)


def _perm_arg(text: str):
    try:
        return parse_permutation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _interval_arg(text: str):
    try:
        return parse_interval(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _bool(x: bool) -> str:
    return "true" if x else "false"


# -- subcommands ------------------------------------------------------------------

def cmd_decompose(args) -> str:
    tree = decomposition_tree(args.perm)
    if args.format == "term":
        return format_tree(tree) + "\n"
    if args.format == "skeleton":
        return format_skeleton(skeleton(tree)) + "\n"
    return emit_dot(tree)


def cmd_poset(args) -> str:
    P = poset_of(args.perm, args.variant, args.with_empty)
    if args.format == "dot":
        return emit_dot(P)
    if args.format == "json":
        return poset_to_json(P) + "\n"
    lines = ["minimal_order: " + " ".join(str(m) for m in P.minimal_order)]
    for e in P.elements:
        below = sorted(P.lower_covers(e), key=lambda x: (len(x), x.lo))
        lines.append(f"{e}: covers " + (" ".join(str(b) for b in below) if below else "-"))
    return "\n".join(lines) + "\n"


def cmd_realizers(args) -> str:
    skel = skeleton(decomposition_tree(args.perm))
    if args.count_only:
        return f"{realizer_count(skel)}\n"
    return "".join(f"{p}\n" for p in enumerate_realizers(skel, cap=args.limit))


def cmd_check(args) -> str:
    perm = args.perm
    Pb = poset_of(perm, MODIFIED, with_empty=True)
    P = poset_of(perm, MODIFIED)
    lattice = is_lattice(Pb)
    rows = [
        ("lattice", _bool(lattice)),
        ("modular", _bool(is_modular(Pb)) if lattice else "n/a"),
        ("distributive", _bool(is_distributive(Pb)) if lattice else "n/a"),
        ("binary", _bool(is_binary(P))),
        ("tree", _bool(is_tree_poset(P))),
        ("separable", _bool(is_separable(perm))),
        ("simple", _bool(is_simple(perm))),
        ("crossing_count", str(planar_layout(Pb)[1])),
    ]
    return "".join(f"{k} {v}\n" for k, v in rows)


class _Disagreement(Exception):
    pass


def cmd_mobius(args) -> str:
    perm, I, J = args.perm, args.source, args.target
    out = {}
    if args.method in ("closed", "both"):
        out["closed"] = mobius_closed(perm, I, J)
    if args.method in ("recursive", "both"):
        Pb = poset_of(perm, MODIFIED, with_empty=True)
        out["recursive"] = mobius_generic(Pb, I, J)
    if args.method != "both":
        return f"{out[args.method]}\n"
    text = f"closed {out['closed']}\nrecursive {out['recursive']}\n"
    if out["closed"] != out["recursive"]:
        raise _Disagreement(text.strip().replace("\n", ", "))
    return text


_COUNT_DEFAULT_METHOD = {
    "posets": "formula", "tree-posets": "formula", "two-realizer": "formula",
    "nonplane": "series", "nonplane-tree": "series",
}


def cmd_count(args) -> str:
    n, family = args.n, args.family
    method = args.method or _COUNT_DEFAULT_METHOD[family]
    if n < 1:
        raise UsageError("--n must be positive")
    if method == "census":
        c = en.brute_force_census(n, workers=args.workers)
        value = {"posets": c.p, "tree-posets": c.t, "two-realizer": c.a,
                 "nonplane": c.q, "nonplane-tree": c.q_tree}[family]
    elif family in ("nonplane", "nonplane-tree"):
        if method == "formula":
            raise UsageError(f"no closed formula for {family}; use --method series or census")
        value = en.series_nonplane("posets" if family == "nonplane" else "tree_posets", n)[n]
    elif family == "two-realizer":
        if method == "formula":
            value = en.count_two_realizer(n)
        else:
            value = 0 if n == 1 else en.separable_skeleton_series(n)[n] + (n == 4)
    elif method == "formula":
        value = en.count_interval_posets(n) if family == "posets" else en.count_tree_interval_posets(n)
    else:
        value = en.series_fixed_point(family.replace("-", "_"), n)[n]
    return f"{value}\n"


def cmd_asymptotics(args) -> str:
    data = en.asymptotics(args.family)
    rows = [("tau", data.tau), ("rho", data.rho), ("amplitude", data.amplitude),
            ("growth_constant", data.growth_constant), ("stanley_constant", data.stanley_constant),
            ("residual", data.residual)]
    return "".join(f"{k} {v!r}\n" for k, v in rows)


def cmd_census(args) -> str:
    c = en.brute_force_census(args.n, workers=args.workers)
    if args.json:
        return json.dumps(c.to_json()) + "\n"
    return (f"n {c.n}\np {c.p}\nq {c.q}\nt {c.t}\na {c.a}\nq_tree {c.q_tree}\n"
            f"classes {len(c.class_sizes)}\ntotal {c.total}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="intervalposets", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="decomposition tree of a permutation")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--format", choices=["term", "dot", "skeleton"], default="term")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("poset", help="interval poset of a permutation")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--variant", choices=["original", "modified"], default="modified")
    p.add_argument("--with-empty", action="store_true")
    p.add_argument("--format", choices=["dot", "json", "text"], default="text")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("realizers", help="permutations sharing the modified interval poset")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMITS.realizer_cap)
    p.set_defaults(func=cmd_realizers)

    p = sub.add_parser("check", help="structural predicates of the interval poset")
    p.add_argument("perm", type=_perm_arg)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("mobius", help="Möbius function on the poset with empty minimum")
    p.add_argument("perm", type=_perm_arg)
    p.add_argument("--from", dest="source", type=_interval_arg, required=True)
    p.add_argument("--to", dest="target", type=_interval_arg, required=True)
    p.add_argument("--method", choices=["closed", "recursive", "both"], default="closed")
    p.set_defaults(func=cmd_mobius)

    p = sub.add_parser("count", help="number of interval posets with n minimal elements")
    p.add_argument("family", choices=list(_COUNT_DEFAULT_METHOD))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=["formula", "series", "census"])
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("asymptotics", help="singularity constants of a plane family")
    p.add_argument("family", choices=["posets", "tree-posets"])
    p.set_defaults(func=cmd_asymptotics)

    p = sub.add_parser("census", help="brute-force classification of all n! permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_census)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        payload = args.func(args)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=sys.stderr)
        print(exc, file=sys.stderr)
        return 1
    except _Disagreement as exc:
        print(f"closed form and recursion disagree: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
