"""Feasibility bounds shared by the enumeration-heavy operations."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # largest k for which all k! permutations are filtered for simplicity
    simple_bound: int = 10
    # largest realizer set that enumerate_realizers will materialize
    realizer_cap: int = 100_000
    # largest n accepted by the brute-force census (9! = 362880 permutations)
    census_max_n: int = 9


DEFAULT_LIMITS = Limits()


class InfeasibleError(ValueError):
    """A request exceeds one of the configured enumeration bounds."""
