"""Classical rough-set primitives over decision tables and sub-tables.

Indiscernibility partitions, the generalized decision of inconsistent
tables, decision-positive regions, the pairwise discernibility structure,
and the reduct predicate. Everything here is a pure function; attribute
sets are frozensets of condition-attribute indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from .errors import DomainError
from .table import DecisionSystem, SubSystem

Table = Union[DecisionSystem, SubSystem]
AttrSet = frozenset[int]


def base_system(table: Table) -> DecisionSystem:
    return table.parent if isinstance(table, SubSystem) else table


def universe(table: Table) -> tuple[int, ...]:
    """Object indices of the table, always in parent-row numbering."""
    if isinstance(table, SubSystem):
        return table.object_indices
    return tuple(range(table.n_objects))


def _checked_attrs(table: Table, attrs: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(attrs)))
    n = base_system(table).n_attrs
    if out and (out[0] < 0 or out[-1] >= n):
        raise DomainError(f"attribute index out of range for |C| = {n}")
    return out


def condition_classes(table: Table, attrs: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Equivalence classes of "equal codes on every attribute in attrs".

    Blocks are ascending object-index tuples, listed in order of first
    occurrence; the empty attribute set yields a single block.
    """
    attrs = _checked_attrs(table, attrs)
    parent = base_system(table)
    blocks: dict[tuple[int, ...], list[int]] = {}
    for i in universe(table):
        row = parent.rows[i]
        blocks.setdefault(tuple(row[a] for a in attrs), []).append(i)
    return tuple(tuple(b) for b in blocks.values())


def generalized_decision(table: Table) -> dict[tuple[int, ...], frozenset[int]]:
    """Per full-attribute condition class, the set of decision codes in it.

    Every class maps to a singleton exactly when the table is consistent.
    """
    parent = base_system(table)
    return {
        block: frozenset(parent.decisions[i] for i in block)
        for block in condition_classes(table, range(parent.n_attrs))
    }


def positive_region(table: Table, attrs: Iterable[int]) -> frozenset[int]:
    """Objects in blocks of ``attrs``-classes that agree on the decision."""
    parent = base_system(table)
    region: set[int] = set()
    for block in condition_classes(table, attrs):
        first = parent.decisions[block[0]]
        if all(parent.decisions[i] == first for i in block[1:]):
            region.update(block)
    return frozenset(region)


@dataclass(frozen=True)
class DiscernibilityMatrix:
    """Cells (object pair, attribute set) for the pairs a reduct must split."""

    cells: tuple[tuple[tuple[int, int], AttrSet], ...]


def discernibility_matrix(table: Table) -> DiscernibilityMatrix:
    """Pairwise cells whose joint separation preserves the positive region.

    A pair (x, y) is stored when merging the two objects would corrupt the
    full-attribute positive region: at least one of them lies in that region
    and either the other does not, or their decisions differ. Pairs sharing
    a condition class never qualify, so every stored cell is non-empty.
    """
    parent = base_system(table)
    uni = universe(table)
    attrs = range(parent.n_attrs)
    pos = positive_region(table, attrs)
    cells = []
    for k, x in enumerate(uni):
        for y in uni[k + 1 :]:
            x_in, y_in = x in pos, y in pos
            if not (x_in or y_in):
                continue
            if x_in and y_in and parent.decisions[x] == parent.decisions[y]:
                continue
            diff = frozenset(a for a in attrs if parent.rows[x][a] != parent.rows[y][a])
            assert diff, "pair needing separation cannot share all condition values"
            cells.append(((x, y), diff))
    return DiscernibilityMatrix(tuple(cells))


def is_reduct(table: Table, attrs: Iterable[int]) -> bool:
    """True iff ``attrs`` preserves the full positive region and is minimal.

    Minimality is checked on one-attribute deletions only; the positive
    region is monotone in the attribute set, so that is equivalent to
    minimality over all proper subsets.
    """
    candidate = frozenset(_checked_attrs(table, attrs))
    parent = base_system(table)
    target = positive_region(table, range(parent.n_attrs))
    if positive_region(table, candidate) != target:
        return False
    return all(positive_region(table, candidate - {a}) != target for a in candidate)
