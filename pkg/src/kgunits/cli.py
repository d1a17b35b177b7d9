"""Command-line surface for the unit-group catalog.

Commands: table, verify, scan-iso, unit-group, decompose, coset-count.
Text output is aligned for reading; --format json emits one deterministic
JSON document per run (sorted keys, fixed indentation), suitable for golden
files and scripting.  Errors print to stderr and exit with status 2.
"""

import argparse
import json
import sys

from .algebra import Algebra
from .catalog import build_catalog, build_row, verify_catalog
from .decompose import decompose_abelian
from .fields import make_field, prime_power_split
from .groups import group_by_label
from .isoprobe import compare_unit_groups, scan_minimum_counterexample
from .presentations import CosetLimitExceeded, DEFAULT_COSET_LIMIT, \
    coset_enumeration, parse_presentation
from .units import UnitGroup

DEFAULT_BOUND = 1024


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _parse_field(text: str) -> tuple[int, int]:
    if not text.startswith("F") or not text[1:].isdigit():
        raise ValueError(f"field label must look like F9, got {text!r}")
    split = prime_power_split(int(text[1:]))
    if split is None:
        raise ValueError(f"{text[1:]} is not a prime power")
    return split


def _algebra_for(field_text: str, group_text: str) -> Algebra:
    p, k = _parse_field(field_text)
    group = group_by_label(group_text)
    algebra = Algebra(make_field(p, k), group)
    if algebra.size >= DEFAULT_BOUND:
        raise ValueError(
            f"{algebra.label()} has size {algebra.size}, outside the catalog "
            f"bound {DEFAULT_BOUND}")
    return algebra


def _aligned(headers: list[str], rows: list[list[str]],
             right: set[int] = frozenset()) -> list[str]:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def fmt(cells):
        parts = []
        for i, cell in enumerate(cells):
            parts.append(cell.rjust(widths[i]) if i in right else cell.ljust(widths[i]))
        return "  ".join(parts).rstrip()
    return [fmt(headers)] + [fmt(r) for r in rows]


def cmd_table(args) -> int:
    catalog = build_catalog(args.bound, args.jobs)
    if args.format == "json":
        _emit_json(catalog.as_dict())
        return 0
    print(f"unit groups of group algebras with size below {catalog.bound} "
          f"({len(catalog.rows)} rows)")
    headers = ["field", "group", "size", "|U|", "decomposition", "structure",
               "method"]
    body = [[r.field, r.group, str(r.size), str(r.unit_count),
             r.decomposition or "-", r.structure, r.method]
            for r in catalog.rows]
    for line in _aligned(headers, body, right={2, 3}):
        print(line)
    return 0


def cmd_verify(args) -> int:
    report = verify_catalog(args.bound, args.jobs)
    if args.format == "json":
        _emit_json(report.as_dict())
        return report.exit_code
    for line in report.lines:
        print(line)
    print(f"{report.matched}/{report.row_count} rows match the published "
          f"values; {len(report.typo_lines)} misprints adjudicated; "
          f"{len(report.mismatch_lines)} mismatches; "
          f"{len(report.inconsistency_lines)} inconsistencies")
    return report.exit_code


def cmd_scan_iso(args) -> int:
    report = scan_minimum_counterexample(args.bound, args.jobs)
    notes = []
    for row in report.rows:
        ga, gb = group_by_label(row.group_a), group_by_label(row.group_b)
        if ga.is_abelian() or gb.is_abelian():
            continue
        p, k = _parse_field(row.field)
        field = make_field(p, k)
        notes.append(compare_unit_groups(UnitGroup(Algebra(field, ga)),
                                         UnitGroup(Algebra(field, gb))))
    if args.format == "json":
        payload = report.as_dict()
        payload["notes"] = [n.as_dict() for n in notes]
        _emit_json(payload)
        return 0
    print(report.headline())
    print(f"pairs examined: {report.pair_count} "
          f"(expected {report.expected_pair_count}); "
          f"inconclusive: {len(report.inconclusive)}")
    headers = ["size", "field", "pair", "verdict", "detail"]
    body = [[str(r.size), r.field, f"{r.group_a} / {r.group_b}", r.verdict,
             r.detail] for r in report.rows]
    for line in _aligned(headers, body, right={0}):
        print(line)
    if notes:
        print("notes on unit groups of the nonabelian pairs:")
        for n in notes:
            print(f"  {n.label_a} vs {n.label_b}: {n.verdict} "
                  f"(orders {n.order_a} and {n.order_b})")
    return 0


def cmd_unit_group(args) -> int:
    algebra = _algebra_for(args.field, args.group)
    row = build_row(algebra.field.p, algebra.field.k, args.group)
    spectrum = sorted(UnitGroup(algebra).unit_order_spectrum().items())
    if args.format == "json":
        payload = row.as_dict()
        payload["spectrum"] = [list(pair) for pair in spectrum]
        _emit_json(payload)
        return 0
    print(f"U({row.field}{row.group}): order {row.unit_count}")
    print(f"structure: {row.structure}")
    print(f"method: {row.method} ({row.method_detail})")
    print("spectrum: " + " ".join(f"{o}:{c}" for o, c in spectrum))
    return 0


def cmd_decompose(args) -> int:
    algebra = _algebra_for(args.field, args.group)
    summands = decompose_abelian(algebra)
    if args.format == "json":
        _emit_json({
            "algebra": algebra.label(),
            "decomposition": summands.render(),
            "blocks": [{"render": b.render(), "dimension": b.dimension(),
                        "unit_order": b.unit_order()} for b in summands.blocks],
            "unit_order": summands.unit_order(),
        })
        return 0
    print(f"{algebra.label()} = {summands.render()}")
    print(f"unit order from blocks: {summands.unit_order()}")
    return 0


def cmd_coset_count(args) -> int:
    presentation = parse_presentation(args.presentation, "left")
    order = coset_enumeration(presentation, args.limit)
    if args.format == "json":
        _emit_json({"presentation": args.presentation, "order": order})
        return 0
    print(order)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kgunits",
        description="unit groups of small group algebras: catalog, "
                    "verification, and the minimal isomorphic pair")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, bound=False, jobs=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if bound:
            p.add_argument("--bound", type=int, default=DEFAULT_BOUND,
                           help="strict upper bound on algebra size "
                                f"(default {DEFAULT_BOUND}; larger values "
                                "extend past the published catalog)")
        if jobs:
            p.add_argument("--jobs", type=int, default=1,
                           help="worker processes (default 1)")

    p = sub.add_parser("table", help="print every catalog row")
    common(p, bound=True, jobs=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare the catalog with published values")
    common(p, bound=True, jobs=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan-iso", help="scan same-field pairs for ring isomorphism")
    common(p, bound=True, jobs=True)
    p.set_defaults(func=cmd_scan_iso)

    p = sub.add_parser("unit-group", help="one unit group, e.g. unit-group F4 C4")
    p.add_argument("field")
    p.add_argument("group")
    common(p)
    p.set_defaults(func=cmd_unit_group)

    p = sub.add_parser("decompose", help="block decomposition of one algebra")
    p.add_argument("field")
    p.add_argument("group")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("coset-count", help="order of a finitely presented group")
    p.add_argument("presentation")
    p.add_argument("--limit", type=int, default=DEFAULT_COSET_LIMIT,
                   help="coset table size cap")
    common(p)
    p.set_defaults(func=cmd_coset_count)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CosetLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
