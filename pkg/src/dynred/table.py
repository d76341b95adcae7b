"""Decision-table model, CSV ingestion, sub-table views, and family sampling.

Sampling is bit-exact across platforms: one splitmix64 stream per plan drives
a partial Fisher-Yates shuffle, with rejection sampling for unbiased bounded
draws. Identical (table, plan) inputs always produce identical families.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import (
    DomainError,
    MissingValueError,
    ParameterError,
    ParseError,
    SchemaError,
)

MASK64 = (1 << 64) - 1


@dataclass(frozen=True)
class DecisionSystem:
    """A finite table of objects with coded condition attributes and one decision.

    Value codes are dense integers assigned per attribute in first-occurrence
    order; ``dictionaries`` maps each attribute name to its raw-string -> code
    table (the decision attribute included).
    """

    name: str
    cond_attrs: tuple[str, ...]
    decision_attr: str
    rows: tuple[tuple[int, ...], ...]
    decisions: tuple[int, ...]
    dictionaries: dict[str, dict[str, int]]

    def __post_init__(self) -> None:
        if not self.rows:
            raise DomainError("a decision system needs at least one object")
        if len(self.decisions) != len(self.rows):
            raise DomainError("rows and decisions differ in length")
        width = len(self.cond_attrs)
        if any(len(r) != width for r in self.rows):
            raise DomainError("every row needs one code per condition attribute")
        names = self.cond_attrs + (self.decision_attr,)
        if len(set(names)) != len(names):
            raise SchemaError("attribute names must be unique")

    @property
    def n_objects(self) -> int:
        return len(self.rows)

    @property
    def n_attrs(self) -> int:
        return len(self.cond_attrs)


@dataclass(frozen=True)
class SubSystem:
    """A row-subset view of a parent system over the same attributes."""

    parent: DecisionSystem
    object_indices: tuple[int, ...]

    def __post_init__(self) -> None:
        idx = self.object_indices
        if not idx:
            raise DomainError("a sub-system needs a non-empty object set")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise DomainError("object indices must be strictly increasing")
        if idx[0] < 0 or idx[-1] >= self.parent.n_objects:
            raise DomainError("object index out of range for the parent system")

    @property
    def n_objects(self) -> int:
        return len(self.object_indices)

    def covers_parent(self) -> bool:
        return len(self.object_indices) == self.parent.n_objects


def parse_decision_table(text: str, decision_column: str, name: str = "table") -> DecisionSystem:
    """Build a DecisionSystem from a CSV document with a header row.

    Condition attributes keep header order (decision column excluded); value
    dictionaries are built in first-occurrence order; duplicate rows are kept.
    Blank lines are ignored.
    """
    records = [rec for rec in csv.reader(io.StringIO(text)) if rec]
    if not records:
        raise ParseError("empty document: header row missing")
    header = records[0]
    if len(set(header)) != len(header):
        raise SchemaError("duplicate attribute names in header")
    if decision_column not in header:
        raise SchemaError(f"decision column {decision_column!r} not found in header")
    data = records[1:]
    if not data:
        raise ParseError("no data rows")

    d_pos = header.index(decision_column)
    cond_attrs = tuple(h for i, h in enumerate(header) if i != d_pos)
    dictionaries: dict[str, dict[str, int]] = {h: {} for h in header}
    rows: list[tuple[int, ...]] = []
    decisions: list[int] = []
    for lineno, rec in enumerate(data, start=2):
        if len(rec) != len(header):
            raise ParseError(f"row at line {lineno} has {len(rec)} cells, expected {len(header)}")
        codes = []
        for attr, raw in zip(header, rec):
            if raw == "":
                raise MissingValueError(f"empty cell in column {attr!r} at line {lineno}")
            table = dictionaries[attr]
            codes.append(table.setdefault(raw, len(table)))
        decisions.append(codes[d_pos])
        rows.append(tuple(c for i, c in enumerate(codes) if i != d_pos))

    return DecisionSystem(
        name=name,
        cond_attrs=cond_attrs,
        decision_attr=decision_column,
        rows=tuple(rows),
        decisions=tuple(decisions),
        dictionaries=dictionaries,
    )


def render_csv(system: DecisionSystem) -> str:
    """Serialize back to CSV (conditions in order, decision last).

    Re-parsing the result with the same decision column reproduces the
    system exactly, codes and dictionaries included.
    """
    inverse = {
        attr: {code: raw for raw, code in table.items()}
        for attr, table in system.dictionaries.items()
    }
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(list(system.cond_attrs) + [system.decision_attr])
    for codes, dec in zip(system.rows, system.decisions):
        raws = [inverse[a][c] for a, c in zip(system.cond_attrs, codes)]
        raws.append(inverse[system.decision_attr][dec])
        writer.writerow(raws)
    return buf.getvalue()


def make_subsystem(system: DecisionSystem, indices: Iterable[int]) -> SubSystem:
    """Sub-system over the given rows; indices are deduplicated and sorted."""
    idx = tuple(sorted(set(indices)))
    if not idx:
        raise DomainError("cannot build a sub-system over an empty object set")
    return SubSystem(system, idx)


def full_subsystem(system: DecisionSystem) -> SubSystem:
    """The sub-system covering every row, equivalent to the system itself."""
    return SubSystem(system, tuple(range(system.n_objects)))


class SplitMix64:
    """splitmix64 stream; all arithmetic modulo 2**64."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection, free of modulo bias."""
        if n <= 0:
            raise ParameterError("bounded draw needs n >= 1")
        threshold = (1 << 64) - ((1 << 64) % n)
        while True:
            u = self.next_u64()
            if u < threshold:
                return u % n


def _draw_indices(rng: SplitMix64, n: int, m: int) -> tuple[int, ...]:
    # Partial Fisher-Yates: permute the first m slots, then sort them.
    pool = list(range(n))
    for i in range(m):
        j = i + rng.below(n - i)
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(sorted(pool[:m]))


@dataclass(frozen=True)
class SamplingPlan:
    """Deterministic sampling plan: seed, sample-size fractions, repeat count."""

    seed: int
    fractions: tuple[Fraction, ...]
    samples_per_fraction: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "fractions", tuple(Fraction(f) for f in self.fractions))
        if not 0 <= self.seed <= MASK64:
            raise ParameterError("seed must fit in an unsigned 64-bit integer")
        if not self.fractions:
            raise ParameterError("at least one fraction is required")
        for f in self.fractions:
            if not 0 < f <= 1:
                raise ParameterError(f"fraction {f} outside (0, 1]")
        if self.samples_per_fraction < 1:
            raise ParameterError("samples_per_fraction must be >= 1")


@dataclass(frozen=True)
class Family:
    """Ordered multiset of sub-systems of one parent; duplicates count."""

    members: tuple[SubSystem, ...]
    plan: SamplingPlan | None = None

    def __post_init__(self) -> None:
        if not self.members:
            raise DomainError("a family needs at least one member")
        parent = self.members[0].parent
        if any(m.parent != parent for m in self.members[1:]):
            raise DomainError("all family members must share one parent system")

    @property
    def parent(self) -> DecisionSystem:
        return self.members[0].parent

    def __len__(self) -> int:
        return len(self.members)


def sample_family(system: DecisionSystem, plan: SamplingPlan) -> Family:
    """Draw the plan's sub-systems from ``system``.

    For each fraction f, ``samples_per_fraction`` sub-systems of size
    ceil(f * |U|) are drawn without replacement, all from one splitmix64
    stream seeded by the plan; members are ordered by (fraction, sample).
    Pure function: equal inputs give equal families.
    """
    rng = SplitMix64(plan.seed)
    n = system.n_objects
    members = []
    for f in plan.fractions:
        m = -((-f.numerator * n) // f.denominator)  # exact ceil(f*n), never 0
        for _ in range(plan.samples_per_fraction):
            members.append(SubSystem(system, _draw_indices(rng, n, m)))
    return Family(tuple(members), plan)
