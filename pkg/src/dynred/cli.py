"""Command-line front end.

Subcommands: ``reducts`` and ``core`` for the static analysis, ``dynamic``
for the family-level sets, ``verify`` to run the containment-law checks.
One canonically ordered JSON document goes to stdout (sorted keys, sorted
attribute-name arrays, reduct lists in canonical order), diagnostics to
stderr. Exit codes: 0 success, 1 usage error, 2 parse/schema error,
3 capacity limit, 4 non-vacuous verification failure, 70 self-check
mismatch under --exact.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .dynamic import (
    FamilyAnalysis,
    analyze_family,
    parse_lambda,
    stability_report,
    verify_theorems,
)
from .errors import (
    CapacityError,
    DomainError,
    MissingValueError,
    ParameterError,
    ParseError,
    SchemaError,
    SelfCheckError,
)
from .oracle import brute_force_core, brute_force_reducts
from .reducts import DEFAULT_MAX_ATTRS, DEFAULT_MAX_REDUCTS, all_reducts, core_of
from .table import DecisionSystem, Family, SamplingPlan, parse_decision_table, sample_family

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_VERIFY = 4
EXIT_SELFCHECK = 70


class _Parser(argparse.ArgumentParser):
    # argparse defaults to exit code 2 on bad flags; usage errors are 1 here.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dynred", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--input", required=True, help="CSV file with a header row")
        p.add_argument("--decision", required=True, help="name of the decision column")
        p.add_argument("--exact", action="store_true",
                       help="cross-check every enumeration against the brute-force oracle")
        p.add_argument("--max-attrs", type=int, default=DEFAULT_MAX_ATTRS,
                       help="condition-attribute enumeration limit")
        p.add_argument("--max-reducts", type=int, default=DEFAULT_MAX_REDUCTS,
                       help="cap on the enumerated reduct count")

    def add_sampling(p):
        p.add_argument("--fractions", required=True,
                       help="comma-separated sample-size fractions in (0,1]")
        p.add_argument("--samples", type=int, default=1,
                       help="sub-systems drawn per fraction")
        p.add_argument("--seed", type=int, default=0, help="64-bit sampling seed")
        p.add_argument("--lambda", dest="lam", required=True,
                       help="precision coefficient, a decimal in (0.5, 1]")

    add_common(sub.add_parser("reducts", help="enumerate all reducts and the core"))
    add_common(sub.add_parser("core", help="compute the core without enumeration"))
    p_dynamic = sub.add_parser("dynamic", help="sample a family and compute all stability sets")
    add_common(p_dynamic)
    add_sampling(p_dynamic)
    p_verify = sub.add_parser("verify", help="run the containment-law checks on a sampled family")
    add_common(p_verify)
    add_sampling(p_verify)
    return parser


def _attr_names(system: DecisionSystem, attrs) -> list[str]:
    return sorted(system.cond_attrs[a] for a in attrs)


def _reduct_names(system: DecisionSystem, sets) -> list[list[str]]:
    return sorted(_attr_names(system, s) for s in sets)


def _witness_names(system: DecisionSystem, witness: dict | None) -> dict | None:
    if witness is None:
        return None
    out = {}
    for key, value in witness.items():
        if isinstance(value, int):
            out[key] = system.cond_attrs[value]
        elif isinstance(value, (list, tuple, frozenset, set)):
            out[key] = _attr_names(system, value)
        else:
            out[key] = value
    return out


def _parse_fractions(text: str) -> list[Fraction]:
    out = []
    for piece in text.split(","):
        try:
            f = Fraction(piece.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"cannot parse fraction {piece.strip()!r}") from exc
        out.append(f)
    return out


def _static_reducts(system: DecisionSystem, args) -> tuple:
    reducts = all_reducts(system, max_attrs=args.max_attrs, max_reducts=args.max_reducts)
    core = core_of(system)
    if args.exact:
        _cross_check(system, reducts, core, what="base system")
    return reducts, core


def _cross_check(table, reducts, core, what: str) -> None:
    expected = brute_force_reducts(table)
    if tuple(reducts) != expected:
        raise SelfCheckError(f"{what}: engine reducts disagree with the exhaustive oracle")
    if core != brute_force_core(table):
        raise SelfCheckError(f"{what}: engine core disagrees with the exhaustive oracle")


def _analyze(system: DecisionSystem, args) -> tuple[FamilyAnalysis, Family]:
    fractions = _parse_fractions(args.fractions)
    plan = SamplingPlan(seed=args.seed, fractions=tuple(fractions),
                        samples_per_fraction=args.samples)
    family = sample_family(system, plan)
    analysis = analyze_family(system, family,
                              max_attrs=args.max_attrs, max_reducts=args.max_reducts)
    if args.exact:
        _cross_check(system, analysis.red_s, analysis.core_s, what="base system")
        for i, (member, mem) in enumerate(zip(family.members, analysis.per_member)):
            _cross_check(member, mem.reducts, mem.core, what=f"family member {i}")
    return analysis, family


def _base_report(system: DecisionSystem, args) -> dict:
    return {
        "input": {
            "path": args.input,
            "rows": system.n_objects,
            "attributes": list(system.cond_attrs),
            "decision": system.decision_attr,
        },
        "params": {
            "command": args.command,
            "decision": args.decision,
            "exact": args.exact,
            "max_attrs": args.max_attrs,
            "max_reducts": args.max_reducts,
            "fractions": getattr(args, "fractions", None),
            "samples": getattr(args, "samples", None),
            "seed": getattr(args, "seed", None),
            "lambda": getattr(args, "lam", None),
        },
    }


def _family_sections(system: DecisionSystem, analysis: FamilyAnalysis,
                     family: Family, lam: Fraction) -> dict:
    report = stability_report(analysis, [lam])
    s = report.per_lambda[0]
    return {
        "family": [
            {
                "indices": list(member.object_indices),
                "reducts": _reduct_names(system, mem.reducts),
                "core": _attr_names(system, mem.core),
            }
            for member, mem in zip(family.members, analysis.per_member)
        ],
        "dynamic": {
            "dr": _reduct_names(system, s.dr),
            "dr_lambda": _reduct_names(system, s.dr_lambda),
            "gdr": _reduct_names(system, s.gdr),
            "gdr_lambda": _reduct_names(system, s.gdr_lambda),
            "dcore": _attr_names(system, s.dcore),
            "dcore_lambda": _attr_names(system, s.dcore_lambda),
            "gdcore": _attr_names(system, s.gdcore),
            "gdcore_lambda": _attr_names(system, s.gdcore_lambda),
        },
        "stability": {
            "family_size": report.family_size,
            "attr_core_support": {
                system.cond_attrs[a]: count
                for a, count in report.attr_core_support.items()
            },
            "reduct_support": sorted(
                (
                    {"reduct": _attr_names(system, r), "support": count}
                    for r, count in report.reduct_support
                ),
                key=lambda entry: entry["reduct"],
            ),
        },
    }


def _execute(args) -> tuple[dict, int]:
    text = Path(args.input).read_text(encoding="utf-8")
    system = parse_decision_table(text, args.decision, name=Path(args.input).stem)
    report = _base_report(system, args)

    if args.command == "reducts":
        reducts, core = _static_reducts(system, args)
        report["static"] = {
            "reducts": _reduct_names(system, reducts),
            "core": _attr_names(system, core),
        }
        return report, EXIT_OK

    if args.command == "core":
        core = core_of(system)
        if args.exact and core != brute_force_core(system):
            raise SelfCheckError("base system: engine core disagrees with the exhaustive oracle")
        report["static"] = {"core": _attr_names(system, core)}
        return report, EXIT_OK

    lam = parse_lambda(args.lam)
    analysis, family = _analyze(system, args)
    report["static"] = {
        "reducts": _reduct_names(system, analysis.red_s),
        "core": _attr_names(system, analysis.core_s),
    }
    report.update(_family_sections(system, analysis, family, lam))

    if args.command == "dynamic":
        return report, EXIT_OK

    checks = verify_theorems(analysis, lam)
    report["verification"] = [
        {
            "check": c.check,
            "status": c.status,
            "detail": c.detail,
            "witness": _witness_names(system, c.witness),
        }
        for c in checks
    ]
    failed = any(c.status == "fail" for c in checks)
    return report, EXIT_VERIFY if failed else EXIT_OK


def run(argv=None) -> int:
    """Parse flags, run the selected pipeline, print one JSON document."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, status = _execute(args)
    except (ParameterError, DomainError) as exc:
        print(f"dynred: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, SchemaError, MissingValueError) as exc:
        print(f"dynred: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"dynred: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except SelfCheckError as exc:
        print(f"dynred: {exc}", file=sys.stderr)
        return EXIT_SELFCHECK
    except OSError as exc:
        print(f"dynred: cannot read input: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    return status


def main() -> None:
    sys.exit(run())
