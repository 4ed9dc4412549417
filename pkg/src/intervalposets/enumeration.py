"""Counting interval posets: closed formulas, generating-function series,
singularity-analysis constants, and the brute-force census.

Counts are exact Python integers throughout; floats appear only in
:func:`asymptotics` and :func:`nonplane_growth`.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

import sympy
from scipy import optimize

from .config import DEFAULT_LIMITS, InfeasibleError
from .decomposition import (
    LINEAR, _block_tree, _to_tree, canonical_skeleton_string, format_skeleton, parse_skeleton, skeleton,
)
from .perm import Permutation

POSETS = "posets"
TREE_POSETS = "tree_posets"
FAMILIES = (POSETS, TREE_POSETS)


def _family(family: str) -> str:
    family = family.replace("-", "_")
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return family


@dataclass(frozen=True)
class CoefficientSeries:
    coeffs: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]


# -- closed formulas --------------------------------------------------------------

def _exact_div(total: int, n: int) -> int:
    q, r = divmod(total, n)
    if r:
        raise ArithmeticError(f"bracketed sum {total} is not divisible by {n}")
    return q


@lru_cache(maxsize=None)
def count_interval_posets(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    total = 0
    for i in range(1, n):
        # inner terms C(i, k) C(m, i - 1) with m = n - 2k - 2, stepped by exact ratios
        inner, a, b, m = 0, 1, math.comb(n - 2, i - 1), n - 2
        for k in range(0, min(i, (n - i - 1) // 2) + 1):
            inner += a * b
            a = a * (i - k) // (k + 1)
            if m - i - 1 >= 0:
                b = b * (m - i + 1) * (m - i) // (m * (m - 1))
            m -= 2
        total += math.comb(n + i - 1, i) * inner
    return _exact_div(total, n)


@lru_cache(maxsize=None)
def count_tree_interval_posets(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    total = math.comb(2 * n - 2, n - 1)
    for i in range(1, n - 2):
        # inner terms C(i, k) C(m, k - 1) with m = n - i - k - 2
        inner, a, b, m = 0, i, 1, n - i - 3
        for k in range(1, min(i, (n - i - 1) // 2) + 1):
            inner += a * b
            a = a * (i - k) // (k + 1)
            if m >= 1:
                b = b * (m - k + 1) * (m - k) // (m * k)
            m -= 1
        total += math.comb(n + i - 1, i) * inner
    return _exact_div(total, n)


# -- truncated series arithmetic ---------------------------------------------------

def _mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a[:order + 1]):
        if x:
            for j in range(order + 1 - i):
                out[i + j] += x * b[j]
    return out


def _geometric(f: list[int], order: int) -> list[int]:
    """1 / (1 - f) for f with zero constant term."""
    g = [1] + [0] * order
    for n in range(1, order + 1):
        g[n] = sum(f[i] * g[n - i] for i in range(1, n + 1))
    return g


def _poset_step(f: list[int], order: int) -> list[int]:
    f2 = _mul(f, f, order)
    f4 = _mul(f2, f2, order)
    body = _mul([x + y for x, y in zip(f2, f4)], _geometric(f, order), order)
    body[1] += 1
    return body


def _tree_step(f: list[int], order: int) -> list[int]:
    f2 = _mul(f, f, order)
    f4 = _mul(f2, f2, order)
    tail = _mul(f4, _geometric(f, order), order)
    out = [x + y for x, y in zip(f2, tail)]
    out[1] += 1
    return out


def _separable_step(f: list[int], order: int) -> list[int]:
    out = _mul(_mul(f, f, order), _geometric(f, order), order)
    out[1] += 1
    return out


def _fixed_point(step: Callable[[list[int], int], list[int]], N: int) -> list[int]:
    # Each pass fixes one more coefficient, so pass t only needs order t;
    # once the full order is reached, iterate until nothing changes.
    f = [0] * (N + 1)
    t = 0
    while True:
        t += 1
        order = min(N, t)
        new = step(f[:order + 1], order) + [0] * (N - order)
        if order == N and new == f:
            return f
        f = new


def series_fixed_point(family: str, N: int) -> CoefficientSeries:
    if N < 1:
        raise ValueError("N must be positive")
    step = _poset_step if _family(family) == POSETS else _tree_step
    return CoefficientSeries(tuple(_fixed_point(step, N)))


def series_nonplane(family: str, N: int) -> CoefficientSeries:
    """Coefficients of Q = z + MSet>=2(Q) + MSet>=4(Q) (posets) or
    Q = z + MSet=2(Q) + MSet>=4(Q) (tree posets).

    Uses the Euler transform ``n m_n = sum_k b_k m_{n-k}`` with
    ``b_k = sum_{d | k} d q_d`` for the full multiset series ``m``.  The
    contribution of ``q_n`` itself is split off, so each coefficient is
    determined from smaller ones with exact integer division.
    """
    if N < 1:
        raise ValueError("N must be positive")
    tree = _family(family) == TREE_POSETS
    q = [0] * (N + 1)
    m = [1] + [0] * N
    b = [0] * (N + 1)
    sq = [0] * (N + 1)
    cube = [0] * (N + 1)
    for n in range(1, N + 1):
        b_rest = sum(d * q[d] for d in range(1, n // 2 + 1) if n % d == 0)
        acc = sum(b[k] * m[n - k] for k in range(1, n)) + b_rest
        m_rest, r = divmod(acc, n)
        if r:
            raise ArithmeticError(f"Euler transform step {n} is not integral")
        sq[n] = sum(q[i] * q[n - i] for i in range(1, n))
        cube[n] = sum(q[i] * sq[n - i] for i in range(1, n - 1))
        pairs = sq[n] + (q[n // 2] if n % 2 == 0 else 0)
        mixed = sum(q[n - 2 * j] * q[j] for j in range(1, (n - 1) // 2 + 1))
        triples = cube[n] + 3 * mixed + (2 * q[n // 3] if n % 3 == 0 else 0)
        mset2, mset3 = pairs // 2, triples // 6
        mset_ge4 = m_rest - mset2 - mset3
        q[n] = (n == 1) + (mset2 if tree else m_rest) + mset_ge4
        b[n] = b_rest + n * q[n]
        m[n] = m_rest + q[n]
    return CoefficientSeries(tuple(q))


@dataclass(frozen=True)
class GrowthEstimate:
    N: int
    ratio: float          # q_N / q_{N-1}
    extrapolated: float   # N r_N - (N-1) r_{N-1}, removes the 1/n term
    amplitude: float      # q_N N^{3/2} / extrapolated^N


def nonplane_growth(family: str, N: int = 400) -> GrowthEstimate:
    q = series_nonplane(family, N).coeffs
    r_n = q[N] / q[N - 1]
    r_m = q[N - 1] / q[N - 2]
    beta = N * r_n - (N - 1) * r_m
    log_amp = math.log(q[N]) + 1.5 * math.log(N) - N * math.log(beta)
    return GrowthEstimate(N, r_n, beta, math.exp(log_amp))


# -- exact counts derived from series ---------------------------------------------

def large_schroder(m: int) -> int:
    """r_m = sum_k C(m+k, m-k) Cat(k); counts separable permutations of size m + 1."""
    if m < 0:
        raise ValueError("m must be non-negative")
    return sum(math.comb(m + k, m - k) * math.comb(2 * k, k) // (k + 1) for k in range(m + 1))


def little_schroder(n: int) -> int:
    """s_n, half the number of separable permutations of size n (s_1 = 1)."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 1
    return _exact_div(large_schroder(n - 1), 2)


def separable_skeleton_series(N: int) -> CoefficientSeries:
    """Plane trees with only linear nodes: F = z + F^2 / (1 - F); [z^n] = s_n."""
    return CoefficientSeries(tuple(_fixed_point(_separable_step, N)))


def count_two_realizer(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return 0
    return little_schroder(n) + (1 if n == 4 else 0)


# -- asymptotics -------------------------------------------------------------------

@dataclass(frozen=True)
class AsymptoticData:
    family: str
    tau: float
    rho: float
    amplitude: float
    growth_constant: float
    stanley_constant: float
    residual: float


def _lambda_expr(family: str):
    u = sympy.Symbol("u")
    if family == POSETS:
        return u, (u**2 + u**4) / (1 - u)
    return u, u**2 + u**4 / (1 - u)


def asymptotics(family: str) -> AsymptoticData:
    """Square-root singularity data for the plane families.

    ``tau`` solves Lambda'(u) = 1 in (0, 1), ``rho = tau - Lambda(tau)``.
    """
    family = _family(family)
    u, lam = _lambda_expr(family)
    d1, d2 = sympy.diff(lam, u), sympy.diff(lam, u, 2)
    f = sympy.lambdify(u, lam)
    f1 = sympy.lambdify(u, d1 - 1)
    f2 = sympy.lambdify(u, d2)
    lo, hi = 0.0, 1.0 - 1e-9
    if not f1(lo) < 0 < f1(hi):
        raise ArithmeticError("Lambda'(u) - 1 does not change sign on (0, 1)")
    tau = optimize.bisect(f1, lo, hi, xtol=1e-6)
    tau = float(optimize.newton(f1, tau, fprime=f2, tol=1e-15, maxiter=50))
    residual = abs(float(f1(tau)))
    if residual > 1e-12:
        raise ArithmeticError(f"Newton refinement stalled, |Lambda'(tau) - 1| = {residual}")
    rho = tau - float(f(tau))
    lam2 = float(f2(tau))
    return AsymptoticData(
        family=family,
        tau=tau,
        rho=rho,
        amplitude=math.sqrt(2 * rho / lam2),
        growth_constant=1 / rho,
        stanley_constant=math.sqrt(rho / (2 * math.pi * lam2)),
        residual=residual,
    )


# -- brute-force census ------------------------------------------------------------

@dataclass
class Census:
    n: int
    p: int
    q: int
    t: int
    a: int
    q_tree: int
    class_sizes: dict[str, int] = field(repr=False)
    total: int = 0

    def to_json(self) -> dict:
        return {
            "n": self.n, "p": str(self.p), "q": str(self.q), "t": str(self.t),
            "a": str(self.a), "q_tree": str(self.q_tree), "total": str(self.total),
            "class_sizes": {k: str(v) for k, v in sorted(self.class_sizes.items())},
        }


def plane_key(perm: Permutation) -> str:
    return format_skeleton(skeleton(_to_tree(_block_tree(perm.values))))


def _census_chunk(args: tuple[int, int]) -> Counter:
    import itertools

    n, first = args
    rest = [v for v in range(1, n + 1) if v != first]
    counts: Counter = Counter()
    for tail in itertools.permutations(rest):
        counts[plane_key(Permutation((first,) + tail))] += 1
    return counts


def _is_tree_skeleton(key: str) -> bool:
    return all(not (node.kind == LINEAR and len(node.children) >= 3)
               for node, _ in parse_skeleton(key).nodes())


def brute_force_census(n: int, max_n: int | None = None, workers: int = 1) -> Census:
    """Group all n! permutations by the skeleton of their decomposition tree."""
    if max_n is None:
        max_n = DEFAULT_LIMITS.census_max_n
    if not 1 <= n <= max_n:
        raise InfeasibleError(f"census size {n} outside 1..{max_n}")
    chunks = [(n, first) for first in range(1, n + 1)]
    counts: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_census_chunk, chunks):
                counts.update(part)
    else:
        for chunk in chunks:
            counts.update(_census_chunk(chunk))
    nonplane = {canonical_skeleton_string(parse_skeleton(k)) for k in counts}
    trees = [k for k in counts if _is_tree_skeleton(k)]
    return Census(
        n=n,
        p=len(counts),
        q=len(nonplane),
        t=len(trees),
        a=sum(1 for v in counts.values() if v == 2),
        q_tree=len({canonical_skeleton_string(parse_skeleton(k)) for k in trees}),
        class_sizes=dict(counts),
        total=sum(counts.values()),
    )
