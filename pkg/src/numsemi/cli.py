"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import report
from .bounds import bounds_report, reports_up_to
from .cotangent import t1_graded
from .enumeration import GENUS_CAP, counts_by_genus, enumerate_by_genus, filter_non_negatively_graded
from .errors import SemigroupError
from .families import verify_parametrization, verify_syzygies
from .presentation import minimal_presentation, validate_presentation
from .semigroup import apery_set, effective_weight, end_lambda, from_gaps, parse_semigroup


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _semigroup(args):
    if args.gens and args.gaps is not None:
        raise UsageError("give either --gens or --gaps, not both")
    try:
        if args.gens:
            return parse_semigroup(",".join(map(str, args.gens)))
        if args.gaps is not None:
            return from_gaps(args.gaps)
    except SemigroupError as exc:
        raise UsageError(str(exc))
    raise UsageError("one of --gens or --gaps is required")


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_info(args) -> int:
    s = _semigroup(args)
    rec = s.to_json()
    if s.genus:
        rec["lambda"] = end_lambda(s).lam
        rec["endo_gaps"] = list(end_lambda(s).endo_gaps)
        rec["ewt"] = effective_weight(s)
        rec["apery"] = list(apery_set(s, s.multiplicity))
    if args.format == "json":
        _emit(json.dumps(rec) + "\n", args.output)
    else:
        _emit("".join(f"{k}: {v}\n" for k, v in rec.items()), args.output)
    return 0


def cmd_presentation(args) -> int:
    s = _semigroup(args)
    p = minimal_presentation(s)
    verdict = validate_presentation(s, p)
    if args.format == "json":
        _emit(json.dumps(p.to_json()) + "\n", args.output)
    else:
        lines = [f"{rel.pretty()}    (degree {rel.degree})" for rel in p.relations]
        _emit("\n".join(lines) + "\n", args.output)
    if not verdict:
        print(json.dumps({"check": verdict.check, "detail": verdict.detail}), file=sys.stderr)
        return 1
    return 0


def cmd_t1(args) -> int:
    s = _semigroup(args)
    _emit(json.dumps(t1_graded(s).to_json()) + "\n", args.output)
    return 0


def cmd_bounds(args) -> int:
    s = _semigroup(args)
    r = bounds_report(s)
    if args.format == "csv":
        _emit(report.reports_to_csv([r]), args.output)
    elif args.format == "json":
        _emit(report.reports_to_json([r]), args.output)
    else:
        _emit(report.render_reports_table([r]), args.output)
    return 0 if r.lemma_holds else 1


def cmd_table1(args) -> int:
    rows = report.table1_rows()
    problems = report.table1_mismatches(rows)
    if args.format == "json":
        doc = [
            {"gaps": list(r.gaps), "np": r.np_bound, "dim": r.dim, "dp": r.dp_bound, "t1_plus": r.t1_plus}
            for r in rows
        ]
        _emit(json.dumps(doc) + "\n", args.output)
    else:
        _emit(report.render_table1(rows), args.output)
    if problems:
        print(json.dumps({"mismatches": problems}), file=sys.stderr)
        return 1
    return 0


def cmd_table2(args) -> int:
    if args.tau_max < 1:
        raise UsageError("--tau-max must be >= 1")
    rows = report.table2_rows(args.tau_max)
    if args.format == "json":
        doc = [
            {
                "family": r.family, "tau": r.tau, "generators": list(r.generators),
                "np": r.np_bound, "cfv_cs": r.cfv_cs, "dp": r.dp_bound, "t1_plus": r.t1_plus,
                "expected": list(r.expected), "ok": r.ok,
            }
            for r in rows
        ]
        _emit(json.dumps(doc) + "\n", args.output)
    else:
        _emit(report.render_table2(rows), args.output)
    return 0 if all(r.ok for r in rows) else 1


def cmd_scan(args) -> int:
    if args.genus_max < 1 or args.genus_max > GENUS_CAP:
        raise UsageError(f"--genus-max must be in [1, {GENUS_CAP}]")
    if args.jobs < 1:
        raise UsageError("--jobs must be >= 1")
    reports = reports_up_to(args.genus_max, jobs=args.jobs)
    if args.filter == "non-neg-graded":
        reports = [r for r in reports if r.t1_plus >= 1]
    summary = report.scan_summary(reports)
    if args.format == "csv":
        _emit(report.reports_to_csv(reports), args.output)
        print(json.dumps(summary), file=sys.stderr)
    elif args.format == "json":
        _emit(report.reports_to_json(reports, summary), args.output)
    else:
        text = report.render_reports_table(reports)
        text += "\n" + "".join(f"{k}: {v}\n" for k, v in summary.items())
        _emit(text, args.output)
    return 0 if summary["lemma_counterexamples"] == 0 else 1


def cmd_enumerate(args) -> int:
    if args.genus_max < 0 or args.genus_max > GENUS_CAP:
        raise UsageError(f"--genus-max must be in [0, {GENUS_CAP}]")
    sgs = enumerate_by_genus(args.genus_max, jobs=args.jobs)
    if args.filter == "non-neg-graded":
        sgs = list(filter_non_negatively_graded(sgs))
    if args.count_only:
        text = "".join(f"{g} {n}\n" for g, n in counts_by_genus(sgs).items())
    else:
        text = "".join(s.to_text(use_gaps=args.as_gaps) + "\n" for s in sgs)
    _emit(text, args.output)
    return 0


def cmd_families_verify(args) -> int:
    if args.tau_max < 1:
        raise UsageError("--tau-max must be >= 1")
    failures = []
    for row in report.table2_rows(args.tau_max):
        if not row.ok:
            failures.append({"family": row.family, "tau": row.tau, "computed": [row.np_bound, row.cfv_cs, row.dp_bound, row.t1_plus], "expected": list(row.expected)})
    for fam in (1, 2):
        for tau in range(1, args.tau_max + 1):
            for name, v in (("parametrization", verify_parametrization(fam, tau)), ("syzygies", verify_syzygies(fam, tau))):
                if not v:
                    failures.append({"family": fam, "tau": tau, "check": name, "failures": v.failures})
    print(json.dumps({"ok": not failures, "tau_max": args.tau_max, "failures": failures}))
    return 1 if failures else 0


def cmd_syzygy_verify(args) -> int:
    if args.tau_max < 1:
        raise UsageError("--tau-max must be >= 1")
    failures = []
    for tau in range(1, args.tau_max + 1):
        v = verify_syzygies(args.family, tau)
        if not v:
            failures.append({"tau": tau, "failures": v.failures})
    print(json.dumps({"ok": not failures, "family": args.family, "tau_max": args.tau_max, "failures": failures}))
    return 1 if failures else 0


def _add_semigroup_args(p):
    p.add_argument("--gens", type=_int_list, help="minimal or redundant generators, e.g. 6,7,8")
    p.add_argument("--gaps", type=_int_list, help="gap set, e.g. 1,2,4,5,8")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="numsemi", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("table", "json")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", metavar="PATH")

    p = sub.add_parser("info", help="invariants of one semigroup")
    _add_semigroup_args(p)
    common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("presentation", help="minimal binomial presentation")
    _add_semigroup_args(p)
    common(p)
    p.set_defaults(func=cmd_presentation)

    p = sub.add_parser("t1", help="graded dimensions of T1 as JSON")
    _add_semigroup_args(p)
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_t1)

    p = sub.add_parser("bounds", help="NP, D-P and T1-corrected bounds")
    _add_semigroup_args(p)
    common(p, ("table", "csv", "json"))
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table1", help="non-negatively graded semigroups of genus <= 6")
    common(p)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("table2", help="the three tau-families against their closed forms")
    p.add_argument("--tau-max", type=int, default=5)
    common(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("scan", help="bounds report for every semigroup up to a genus")
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--filter", choices=("all", "non-neg-graded"), default="all")
    common(p, ("table", "csv", "json"))
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("enumerate", help="stream semigroups by genus")
    p.add_argument("--genus-max", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--as-gaps", action="store_true", help="print gap sets instead of generators")
    p.add_argument("--filter", choices=("all", "non-neg-graded"), default="all")
    p.add_argument("--output", metavar="PATH")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("families", help="family checks")
    fsub = p.add_subparsers(dest="action", required=True)
    q = fsub.add_parser("verify")
    q.add_argument("--tau-max", type=int, default=10)
    q.set_defaults(func=cmd_families_verify)

    p = sub.add_parser("syzygy", help="syzygy checks")
    ssub = p.add_subparsers(dest="action", required=True)
    q = ssub.add_parser("verify")
    q.add_argument("--family", type=int, choices=(1, 2), required=True)
    q.add_argument("--tau-max", type=int, default=10)
    q.set_defaults(func=cmd_syzygy_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"numsemi: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
