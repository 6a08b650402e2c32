"""Command-line driver.

    gfunitary orders --group c8 --field 2
    gfunitary predict --group c8xc2 --field 2
    gfunitary verify theorem1 --n 3 --field 4
    gfunitary report --out report.json

Set ``GFUNITARY_WORKERS`` to spread unit sweeps over several processes.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from .algebra import DEFAULT_BUDGET, CapacityError
from .field import FieldSpec
from .group import GroupSpec
from .involutions import enumerate_involutive_automorphisms, named_involutions, parse_involution
from .unitary import METHODS
from .verify import SUITES, order_rows, prediction_rows, run_suite

SCHEMA_VERSION = 1
ROW_FIELDS = [
    "group", "field", "sigma", "order", "exponent", "invariants", "method", "elapsed_ms",
    "predicted", "source", "agree", "status", "reason",
]
# default (group, q) cells: every one fits the default budget
REPORT_CELLS = (("c8", 2), ("c8", 4), ("c8", 8), ("c16", 2), ("c8xc2", 2))
REPORT_SUITES = [
    ("lemma3", 3, 2), ("lemma3", 3, 4), ("lemma3", 4, 2),
    ("lemma5", 3, 2), ("lemma5", 4, 2), ("lemma5", 3, 4), ("lemma5", 4, 4), ("lemma5", 3, 8),
    ("lemma6", 3, 2), ("lemma6", 3, 4), ("lemma6", 3, 8), ("lemma6", 4, 2),
    ("theorem1", 3, 2), ("theorem1", 3, 4), ("theorem1", 4, 2),
    ("example-c8xc2", 3, 2),
]


def parse_field(text: str, modulus: str | None = None) -> FieldSpec:
    text = text.strip().lower().removeprefix("gf(").removesuffix(")").removeprefix("q=")
    q = 1 << int(text[2:]) if text.startswith("2^") else int(text)
    return FieldSpec.from_order(q, int(modulus, 0) if modulus else None)


def select_involutions(group: GroupSpec, choices: list[str] | None):
    """``None``: the named table if one exists, else all.  ``all`` / ``none`` are keywords."""
    if not choices:
        return list(named_involutions(group).values()) or enumerate_involutive_automorphisms(group)
    selected = []
    for choice in choices:
        if choice == "none":
            continue
        if choice == "all":
            selected.extend(enumerate_involutive_automorphisms(group))
        else:
            selected.append(parse_involution(group, choice))
    return selected


def _dump_rows(rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=2) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=ROW_FIELDS, extrasaction="ignore", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({**row, "invariants": " ".join(map(str, row.get("invariants") or []))})
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_orders(args) -> int:
    group = GroupSpec.parse(args.group)
    field = parse_field(args.field, args.modulus)
    rows = order_rows(group, field, select_involutions(group, args.involution), args.method, args.budget)
    _emit(_dump_rows(rows, args.format), args.out)
    return 0 if all(r["status"] != "FAIL" for r in rows) else 1


def cmd_predict(args) -> int:
    group = GroupSpec.parse(args.group)
    field = parse_field(args.field, args.modulus)
    choices = args.involution or ["all"]
    rows = prediction_rows(group, field, select_involutions(group, choices))
    _emit(_dump_rows(rows, args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    field = parse_field(args.field, args.modulus)
    result = run_suite(args.suite, args.n, field, args.seed, args.budget)
    if args.format == "json":
        _emit(json.dumps(result.to_dict(), indent=2) + "\n", args.out)
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "name", "status", "observed", "expected", "reason"])
        for c in result.checks:
            writer.writerow([result.suite, c.name, c.status, json.dumps(c.observed), json.dumps(c.expected), c.reason])
        _emit(buf.getvalue(), args.out)
    else:
        lines = [f"{result.suite} {result.group} {result.field}"]
        for c in result.checks:
            detail = c.reason if c.status == "SKIPPED" else f"observed={c.observed} expected={c.expected}"
            lines.append(f"  {c.status:7} {c.name}: {detail}")
        for key, value in result.notes.items():
            lines.append(f"  note {key}: {json.dumps(value)}")
        lines.append("PASS" if result.passed else "FAIL")
        _emit("\n".join(lines) + "\n", args.out)
    return 0 if result.passed else 1


def build_report(cells, involution_choices=None, method="auto", budget=DEFAULT_BUDGET,
                 seed=0, suites=True, timings=False) -> dict:
    """``cells`` is a sequence of (group text, FieldSpec) pairs."""
    rows = []
    for gtext, field in cells:
        group = GroupSpec.parse(gtext)
        rows.extend(order_rows(group, field, select_involutions(group, involution_choices),
                               method, budget, timings))
    suite_results = []
    if suites:
        for suite, n, q in REPORT_SUITES:
            suite_results.append(run_suite(suite, n, FieldSpec.from_order(q), seed, budget).to_dict())
    return {"schema_version": SCHEMA_VERSION, "seed": seed, "rows": rows, "suites": suite_results}


def cmd_report(args) -> int:
    if args.group or args.field:
        groups = [args.group] if args.group else sorted({g for g, _ in REPORT_CELLS})
        fields = [parse_field(args.field or "2", args.modulus)]
        cells = [(g, f) for g in groups for f in fields]
    else:
        cells = [(g, FieldSpec.from_order(q)) for g, q in REPORT_CELLS]
    report = build_report(cells, args.involution, args.method, args.budget, args.seed,
                          suites=args.format == "json", timings=args.timings)
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    else:
        text = f"# schema_version: {SCHEMA_VERSION}\n" + _dump_rows(report["rows"], "csv")
    _emit(text, args.out)
    checks_ok = all(s["pass"] for s in report["suites"])
    rows_ok = all(r["status"] != "FAIL" for r in report["rows"])
    return 0 if checks_ok and rows_ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default=None, help="field order q, e.g. 2, 4, 8 or 2^3")
    common.add_argument("--modulus", default=None, help="irreducible modulus as an integer, e.g. 0b111")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max normalized units to sweep")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None,
                        help="json (default) or csv; verify also accepts text, its default")

    grouped = argparse.ArgumentParser(add_help=False)
    grouped.add_argument("--group", default=None, help="e.g. c8, c16, c8xc2")
    grouped.add_argument("--involution", action="append", default=None,
                         help="sigma1..sigma6, an image list such as 'a->a^3,b->b', 'all' or 'none'; repeatable")
    grouped.add_argument("--method", choices=METHODS, default="auto")

    parser = argparse.ArgumentParser(prog="gfunitary", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("orders", parents=[common, grouped], help="unitary subgroup orders per involution")
    p.set_defaults(func=cmd_orders)
    p = sub.add_parser("predict", parents=[common, grouped], help="closed-form order predictions")
    p.set_defaults(func=cmd_predict)
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--n", type=int, default=3, help="cyclic group C_(2^n)")
    p.set_defaults(func=cmd_verify)
    p = sub.add_parser("report", parents=[common, grouped], help="write the full verification matrix")
    p.add_argument("--timings", action="store_true", help="include elapsed_ms (breaks byte-identity)")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("orders", "predict") and not args.group:
        parser.error(f"{args.command} requires --group")
    if args.command in ("orders", "predict", "verify") and args.field is None:
        args.field = "2"
    if args.format is None:
        args.format = "text" if args.command == "verify" else "json"
    elif args.format == "text" and args.command != "verify":
        parser.error("--format text is only available for verify")
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
