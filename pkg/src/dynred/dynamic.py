"""Family-level stability constructs for reducts and cores.

Given a decision system S and a family F of sampled sub-systems, this module
computes the stable ("dynamic") reducts and cores in all four flavours:

* plain: membership required in S and in every member of F;
* precision-thresholded: membership required in at least a fraction
  lambda of F, lambda in (1/2, 1];
* generalized: the requirement relative to S itself is dropped;
* generalized + thresholded.

It also exposes the raw support counts behind the thresholded variants and a
verifier for the containment laws tying all eight sets together. Threshold
comparisons are exact: lambda is a rational and support/|F| >= lambda is
decided by integer cross-multiplication, so boundary ties are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import CapacityError, DomainError, ParameterError
from .reducts import (
    DEFAULT_MAX_ATTRS,
    DEFAULT_MAX_REDUCTS,
    all_reducts,
    canonical_reducts,
    core_of,
    intersect_all,
)
from .table import DecisionSystem, Family

ONE_HALF = Fraction(1, 2)

# Default thresholds the verifier walks for the monotonicity check.
LAMBDA_GRID = (
    Fraction(51, 100),
    Fraction(3, 5),
    Fraction(3, 4),
    Fraction(9, 10),
    Fraction(1),
)


def check_lambda(value: Fraction | int | str) -> Fraction:
    """Validate a precision coefficient; admissible range is (1/2, 1]."""
    lam = Fraction(value)
    if not ONE_HALF < lam <= 1:
        raise ParameterError(f"precision coefficient {lam} outside (1/2, 1]")
    return lam


def parse_lambda(text: str) -> Fraction:
    """Exact rational from a decimal string, range-checked."""
    try:
        lam = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParameterError(f"cannot parse precision coefficient {text!r}") from exc
    return check_lambda(lam)


@dataclass(frozen=True)
class MemberAnalysis:
    reducts: tuple[frozenset[int], ...]
    core: frozenset[int]


@dataclass(frozen=True)
class FamilyAnalysis:
    """Cached reducts and cores of a system and of every family member."""

    system: DecisionSystem
    family: Family
    red_s: tuple[frozenset[int], ...]
    core_s: frozenset[int]
    per_member: tuple[MemberAnalysis, ...]

    @property
    def family_size(self) -> int:
        return len(self.per_member)

    @property
    def n_attrs(self) -> int:
        return self.system.n_attrs


def analyze_family(
    system: DecisionSystem,
    family: Family,
    *,
    max_attrs: int = DEFAULT_MAX_ATTRS,
    max_reducts: int = DEFAULT_MAX_REDUCTS,
) -> FamilyAnalysis:
    """Enumerate reducts and cores for the system and each member once."""
    if family.parent != system:
        raise DomainError("family members do not belong to the analyzed system")
    try:
        red_s = all_reducts(system, max_attrs=max_attrs, max_reducts=max_reducts)
    except CapacityError as exc:
        raise CapacityError(f"base system: {exc}") from exc
    per_member = []
    for i, member in enumerate(family.members):
        try:
            red_b = all_reducts(member, max_attrs=max_attrs, max_reducts=max_reducts)
        except CapacityError as exc:
            raise CapacityError(f"family member {i}: {exc}") from exc
        per_member.append(MemberAnalysis(red_b, core_of(member)))
    return FamilyAnalysis(system, family, red_s, core_of(system), tuple(per_member))


def _reduct_support(analysis: FamilyAnalysis, candidate: frozenset[int]) -> int:
    return sum(candidate in m.reducts for m in analysis.per_member)


def _core_support(analysis: FamilyAnalysis, attr: int) -> int:
    return sum(attr in m.core for m in analysis.per_member)


def _meets(count: int, lam: Fraction, size: int) -> bool:
    # count/size >= lam without leaving the integers
    return count * lam.denominator >= lam.numerator * size


def dynamic_reduct(analysis: FamilyAnalysis) -> tuple[frozenset[int], ...]:
    """Reducts of the system that survive as reducts of every member."""
    member_sets = [set(m.reducts) for m in analysis.per_member]
    return tuple(r for r in analysis.red_s if all(r in s for s in member_sets))


def dynamic_reduct_lambda(
    analysis: FamilyAnalysis, lam: Fraction | int | str
) -> tuple[frozenset[int], ...]:
    """Reducts of the system recurring in at least a ``lam`` share of members."""
    lam = check_lambda(lam)
    size = analysis.family_size
    return tuple(
        r for r in analysis.red_s if _meets(_reduct_support(analysis, r), lam, size)
    )


def generalized_dynamic_reduct(analysis: FamilyAnalysis) -> tuple[frozenset[int], ...]:
    """Attribute sets that are reducts of every member; the system is not consulted."""
    common = set(analysis.per_member[0].reducts)
    for m in analysis.per_member[1:]:
        common &= set(m.reducts)
    return canonical_reducts(common)


def generalized_dynamic_reduct_lambda(
    analysis: FamilyAnalysis, lam: Fraction | int | str
) -> tuple[frozenset[int], ...]:
    """Member reducts recurring in at least a ``lam`` share of members.

    Candidates are the union of the members' reduct sets; anything with
    non-zero support lies there, so the pool is lossless.
    """
    lam = check_lambda(lam)
    size = analysis.family_size
    pool = canonical_reducts(r for m in analysis.per_member for r in m.reducts)
    return tuple(r for r in pool if _meets(_reduct_support(analysis, r), lam, size))


def dynamic_core(analysis: FamilyAnalysis) -> frozenset[int]:
    """Core attributes of the system that stay core in every member."""
    out = analysis.core_s
    for m in analysis.per_member:
        out &= m.core
    return out


def dynamic_core_lambda(
    analysis: FamilyAnalysis, lam: Fraction | int | str
) -> frozenset[int]:
    """Core attributes of the system recurring in at least a ``lam`` share of member cores."""
    lam = check_lambda(lam)
    size = analysis.family_size
    return frozenset(
        a for a in analysis.core_s if _meets(_core_support(analysis, a), lam, size)
    )


def generalized_dynamic_core(analysis: FamilyAnalysis) -> frozenset[int]:
    """Attributes that are core in every member, regardless of the system."""
    members = analysis.per_member
    out = members[0].core
    for m in members[1:]:
        out &= m.core
    return out


def generalized_dynamic_core_lambda(
    analysis: FamilyAnalysis, lam: Fraction | int | str
) -> frozenset[int]:
    """Any condition attribute recurring in at least a ``lam`` share of member cores."""
    lam = check_lambda(lam)
    size = analysis.family_size
    return frozenset(
        a for a in range(analysis.n_attrs) if _meets(_core_support(analysis, a), lam, size)
    )


@dataclass(frozen=True)
class LambdaSlice:
    """All eight family-level sets evaluated at one threshold."""

    lam: Fraction
    dr: tuple[frozenset[int], ...]
    dr_lambda: tuple[frozenset[int], ...]
    gdr: tuple[frozenset[int], ...]
    gdr_lambda: tuple[frozenset[int], ...]
    dcore: frozenset[int]
    dcore_lambda: frozenset[int]
    gdcore: frozenset[int]
    gdcore_lambda: frozenset[int]


@dataclass(frozen=True)
class StabilityReport:
    """Raw support counts behind the thresholded sets, plus per-threshold slices."""

    family_size: int
    attr_core_support: dict[int, int]
    reduct_support: tuple[tuple[frozenset[int], int], ...]
    per_lambda: tuple[LambdaSlice, ...]


def stability_report(
    analysis: FamilyAnalysis, lambdas: Sequence[Fraction | int | str] = ()
) -> StabilityReport:
    """Support counts for every attribute and reduct candidate; counts respect multiplicity."""
    candidates = canonical_reducts(
        list(analysis.red_s) + [r for m in analysis.per_member for r in m.reducts]
    )
    slices = []
    for raw in lambdas:
        lam = check_lambda(raw)
        slices.append(
            LambdaSlice(
                lam=lam,
                dr=dynamic_reduct(analysis),
                dr_lambda=dynamic_reduct_lambda(analysis, lam),
                gdr=generalized_dynamic_reduct(analysis),
                gdr_lambda=generalized_dynamic_reduct_lambda(analysis, lam),
                dcore=dynamic_core(analysis),
                dcore_lambda=dynamic_core_lambda(analysis, lam),
                gdcore=generalized_dynamic_core(analysis),
                gdcore_lambda=generalized_dynamic_core_lambda(analysis, lam),
            )
        )
    return StabilityReport(
        family_size=analysis.family_size,
        attr_core_support={a: _core_support(analysis, a) for a in range(analysis.n_attrs)},
        reduct_support=tuple((r, _reduct_support(analysis, r)) for r in candidates),
        per_lambda=tuple(slices),
    )


@dataclass(frozen=True)
class TheoremCheck:
    """Outcome of one verified law: pass, fail, vacuous, or not-applicable."""

    check: str
    status: str
    detail: str
    witness: dict | None = None


def _containment(
    check: str,
    small: frozenset[int],
    big: frozenset[int],
    detail: str,
    vacuous: bool = False,
) -> TheoremCheck:
    missing = sorted(small - big)
    if missing:
        witness = {
            "attribute": missing[0],
            "subset": sorted(small),
            "superset": sorted(big),
        }
        return TheoremCheck(check, "fail", detail, witness)
    return TheoremCheck(check, "vacuous" if vacuous else "pass", detail)


def _equality(
    check: str, left: frozenset[int], right: frozenset[int], detail: str
) -> TheoremCheck:
    diff = sorted(left ^ right)
    if diff:
        witness = {"attribute": diff[0], "left": sorted(left), "right": sorted(right)}
        return TheoremCheck(check, "fail", detail, witness)
    return TheoremCheck(check, "pass", detail)


def verify_theorems(
    analysis: FamilyAnalysis,
    lam: Fraction | int | str,
    *,
    grid: Iterable[Fraction] = LAMBDA_GRID,
) -> tuple[TheoremCheck, ...]:
    """Evaluate the eleven containment/identity laws on this analysis.

    Checks whose hypothesis does not hold (single-member family equal to the
    system; some member covering the whole universe) report "not-applicable".
    Containments over an empty reduct set hold through the full-set
    intersection convention and report "vacuous" instead of "pass".
    Failures carry the offending attribute and both sets; they are data,
    not errors.
    """
    lam = check_lambda(lam)
    n = analysis.n_attrs
    members = analysis.family.members

    dr = dynamic_reduct(analysis)
    dr_lam = dynamic_reduct_lambda(analysis, lam)
    gdr = generalized_dynamic_reduct(analysis)
    gdr_lam = generalized_dynamic_reduct_lambda(analysis, lam)
    dcore = dynamic_core(analysis)
    dcore_lam = dynamic_core_lambda(analysis, lam)
    gdcore = generalized_dynamic_core(analysis)
    gdcore_lam = generalized_dynamic_core_lambda(analysis, lam)

    checks = [
        _containment(
            "T1",
            dcore,
            intersect_all(dr, n),
            "stable core lies inside the intersection of stable reducts",
            vacuous=not dr,
        )
    ]

    family_is_system = len(members) == 1 and members[0].covers_parent()
    if family_is_system:
        checks.append(
            _equality(
                "T2a",
                dcore,
                analysis.core_s,
                "single-member family equal to the system: stable core is the static core",
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "T2a",
                "not-applicable",
                "single-member family equal to the system: stable core is the static core",
            )
        )

    checks.append(
        _equality(
            "T2b",
            dynamic_core_lambda(analysis, Fraction(1)),
            dcore,
            "threshold 1 collapses the thresholded core to the plain stable core",
        )
    )

    ladder = sorted(set(grid) | {lam})
    t2c = TheoremCheck(
        "T2c", "pass", "thresholded cores shrink as the threshold grows"
    )
    for low, high in zip(ladder, ladder[1:]):
        core_low = dynamic_core_lambda(analysis, low)
        core_high = dynamic_core_lambda(analysis, high)
        extra = sorted(core_high - core_low)
        if extra:
            t2c = TheoremCheck(
                "T2c",
                "fail",
                t2c.detail,
                {
                    "attribute": extra[0],
                    "lambda_low": str(low),
                    "lambda_high": str(high),
                    "subset": sorted(core_high),
                    "superset": sorted(core_low),
                },
            )
            break
    checks.append(t2c)

    checks.append(
        _containment(
            "T2d",
            dcore,
            dcore_lam,
            "the plain stable core lies inside every thresholded core",
        )
    )
    checks.append(
        _containment(
            "T3",
            dcore_lam,
            intersect_all(dr_lam, n),
            "thresholded core lies inside the intersection of thresholded reducts",
            vacuous=not dr_lam,
        )
    )
    checks.append(
        _containment(
            "T4a",
            dcore,
            gdcore,
            "stable core lies inside the generalized stable core",
        )
    )
    checks.append(
        _containment(
            "T4b",
            dcore_lam,
            gdcore_lam,
            "thresholded core lies inside the generalized thresholded core",
        )
    )

    if any(m.covers_parent() for m in members):
        checks.append(
            _equality(
                "T4c",
                gdcore,
                dcore,
                "family containing the full system: generalized and plain stable cores agree",
            )
        )
    else:
        checks.append(
            TheoremCheck(
                "T4c",
                "not-applicable",
                "family containing the full system: generalized and plain stable cores agree",
            )
        )

    checks.append(
        _containment(
            "T5a",
            gdcore,
            intersect_all(gdr, n),
            "generalized core lies inside the intersection of generalized reducts",
            vacuous=not gdr,
        )
    )
    checks.append(
        _containment(
            "T5b",
            gdcore_lam,
            intersect_all(gdr_lam, n),
            "generalized thresholded core lies inside the intersection of "
            "generalized thresholded reducts",
            vacuous=not gdr_lam,
        )
    )
    return tuple(checks)
