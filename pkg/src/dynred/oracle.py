"""Brute-force reference route for reducts and cores.

Enumerates every attribute subset against the positive region and keeps the
minimal preserving ones. Deliberately shares nothing with the clause-based
engine beyond the positive-region primitive, so the two routes can catch
each other's bugs. Exponential on purpose; guarded by hard size limits.
"""

from __future__ import annotations

from itertools import combinations

from .errors import CapacityError
from .rough import Table, base_system, positive_region, universe

ORACLE_MAX_ATTRS = 16
ORACLE_MAX_OBJECTS = 64


def brute_force_reducts(table: Table) -> tuple[frozenset[int], ...]:
    """All minimal positive-region-preserving attribute subsets, canonical order."""
    n = base_system(table).n_attrs
    n_obj = len(universe(table))
    if n > ORACLE_MAX_ATTRS:
        raise CapacityError(f"|C| = {n} exceeds the oracle limit {ORACLE_MAX_ATTRS}")
    if n_obj > ORACLE_MAX_OBJECTS:
        raise CapacityError(f"|U| = {n_obj} exceeds the oracle limit {ORACLE_MAX_OBJECTS}")

    target = positive_region(table, range(n))
    preserving = [
        frozenset(subset)
        for size in range(n + 1)
        for subset in combinations(range(n), size)
        if positive_region(table, subset) == target
    ]
    minimal = [s for s in preserving if not any(t < s for t in preserving)]
    return tuple(sorted(minimal, key=sorted))


def brute_force_core(table: Table) -> frozenset[int]:
    """Literal intersection of the brute-force reducts."""
    return frozenset.intersection(*brute_force_reducts(table))
