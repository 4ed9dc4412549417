"""Permutations in one-line notation, their value intervals, and simple permutations.

Permutations are words on ``1..n``.  Intervals are ranges of *values* that
occupy a contiguous window of positions.  Following the convention used
throughout this package, permutations of size 1, 2 and 3 are never simple:
a simple permutation has size at least 4 and only trivial intervals.
"""

from __future__ import annotations

import itertools
import re
import threading
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .config import DEFAULT_LIMITS, InfeasibleError

__all__ = [
    "Permutation", "Interval", "EMPTY",
    "parse_permutation", "format_permutation", "interval_windows", "intervals",
    "apply_symmetry", "inflate", "is_simple", "enumerate_simple",
    "identity", "decreasing", "all_permutations",
]


@dataclass(frozen=True, order=True)
class Permutation:
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise ValueError("a permutation has at least one entry")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"not a bijection onto 1..{len(values)}: {values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __str__(self) -> str:
        return format_permutation(self)

    def __repr__(self) -> str:
        return f"Permutation({format_permutation(self)!r})"

    def inverse(self) -> Permutation:
        inv = [0] * len(self.values)
        for pos, v in enumerate(self.values, 1):
            inv[v - 1] = pos
        return Permutation(tuple(inv))

    def reverse(self) -> Permutation:
        return Permutation(self.values[::-1])

    def complement(self) -> Permutation:
        n = len(self.values)
        return Permutation(tuple(n + 1 - v for v in self.values))


class Interval(NamedTuple):
    """A range ``[lo, hi]`` of values; ``lo > hi`` encodes the empty interval."""

    lo: int
    hi: int

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def issubset(self, other: Interval) -> bool:
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return other.lo <= self.lo and self.hi <= other.hi

    def overlaps(self, other: Interval) -> bool:
        """True when the intersection is non-empty and differs from both."""
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            return False
        return (lo, hi) != tuple(self) and (lo, hi) != tuple(other)

    def __str__(self) -> str:
        if self.is_empty:
            return "empty"
        if self.lo == self.hi:
            return f"{{{self.lo}}}"
        return f"[{self.lo},{self.hi}]"


EMPTY = Interval(1, 0)


def parse_permutation(text: str) -> Permutation:
    """Parse ``"2413"`` (digit word, n <= 9) or ``"10,9,...,1"`` / ``"3 1 2"``.

    >>> parse_permutation("456793128").values
    (4, 5, 6, 7, 9, 3, 1, 2, 8)
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if re.fullmatch(r"\d+", text) and len(text) > 1:
        values = [int(c) for c in text]
        if 0 in values:
            raise ValueError(f"digit-word form only covers values 1..9: {text!r}")
        perm = Permutation(tuple(values))
        return perm
    parts = [p for p in re.split(r"[\s,]+", text) if p]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"not a permutation: {text!r}") from None
    return Permutation(tuple(values))


def format_permutation(perm: Permutation | Sequence[int], sep: str = ",") -> str:
    values = tuple(perm)
    if len(values) <= 9:
        return "".join(map(str, values))
    return sep.join(map(str, values))


def interval_windows(values: Sequence[int]) -> Iterator[tuple[int, int, int, int]]:
    """Yield ``(i, j, lo, hi)`` for every position window ``i..j`` (0-based,
    inclusive) whose values form the contiguous range ``lo..hi``."""
    n = len(values)
    for i in range(n):
        lo = hi = values[i]
        for j in range(i, n):
            v = values[j]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == j - i:
                yield i, j, lo, hi


def intervals(perm: Permutation) -> frozenset[Interval]:
    return frozenset(Interval(lo, hi) for _, _, lo, hi in interval_windows(perm.values))


def apply_symmetry(perm: Permutation, which: str) -> Permutation:
    if which == "inverse":
        return perm.inverse()
    if which == "reverse":
        return perm.reverse()
    if which == "complement":
        return perm.complement()
    raise ValueError(f"unknown symmetry {which!r}")


def identity(k: int) -> Permutation:
    return Permutation(tuple(range(1, k + 1)))


def decreasing(k: int) -> Permutation:
    return Permutation(tuple(range(k, 0, -1)))


def inflate(pattern: Permutation, parts: Sequence[Permutation]) -> Permutation:
    """Substitute ``parts[i]`` for the i-th entry of ``pattern``.

    >>> str(inflate(parse_permutation("312"), [parse_permutation(s) for s in ("12", "231", "4321")]))
    '892317654'
    """
    if len(parts) != len(pattern):
        raise ValueError(f"pattern of size {len(pattern)} inflated with {len(parts)} parts")
    sizes = [len(p) for p in parts]
    offset = [0] * len(parts)
    acc = 0
    for idx in sorted(range(len(parts)), key=lambda i: pattern[i]):
        offset[idx] = acc
        acc += sizes[idx]
    out: list[int] = []
    for part, off in zip(parts, offset):
        out.extend(v + off for v in part)
    return Permutation(tuple(out))


def is_simple(perm: Permutation) -> bool:
    n = len(perm)
    if n < 4:
        return False
    for i, j, _, _ in interval_windows(perm.values):
        if 0 < j - i < n - 1:
            return False
    return True


def all_permutations(n: int) -> Iterator[Permutation]:
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


_simple_cache: dict[int, tuple[Permutation, ...]] = {}
_simple_lock = threading.Lock()


def enumerate_simple(k: int, bound: int | None = None) -> tuple[Permutation, ...]:
    """All simple permutations of size ``k`` in lexicographic order.

    Brute force over ``k!`` candidates; ``k`` above ``bound`` is refused.
    """
    if bound is None:
        bound = DEFAULT_LIMITS.simple_bound
    if k < 1:
        raise ValueError("k must be positive")
    if k > bound:
        raise InfeasibleError(f"simple permutations of size {k} exceed the enumeration bound {bound}")
    cached = _simple_cache.get(k)
    if cached is not None:
        return cached
    with _simple_lock:
        if k not in _simple_cache:
            _simple_cache[k] = tuple(p for p in all_permutations(k) if is_simple(p))
        return _simple_cache[k]


def count_simple(k: int, bound: int | None = None) -> int:
    return len(enumerate_simple(k, bound))


def perms_from(texts: Iterable[str]) -> list[Permutation]:
    return [parse_permutation(t) for t in texts]
