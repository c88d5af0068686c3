"""Table reproduction and machine-readable output."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable

from .bounds import BoundsReport, bounds_report, equality_census
from .enumeration import enumerate_by_genus, filter_non_negatively_graded
from .families import family_expected_invariants, family_generators, family_semigroup

CSV_COLUMNS = (
    "gaps", "generators", "genus", "ewt", "lambda", "np", "dp",
    "t1_plus", "conj", "neg_graded", "lemma_holds",
)

# (gaps, NP, dim, D-P, dim T1+) in published order
TABLE1 = (
    ((1, 2, 4, 5, 8), 9, 9, 10, 1),
    ((1, 2, 3, 5, 7), 10, 10, 11, 1),
    ((1, 2, 3, 6, 7), 9, 9, 10, 1),
    ((1, 2, 4, 5, 7, 10), 11, 11, 12, 1),
    ((1, 2, 4, 5, 8, 11), 10, 10, 11, 1),
    ((1, 2, 3, 5, 6, 9), 12, 12, 13, 1),
    ((1, 2, 3, 5, 6, 10), 11, 11, 12, 1),
    ((1, 2, 3, 5, 7, 9), 11, 11, 13, 2),
    ((1, 2, 3, 5, 7, 11), 10, 10, 11, 1),
    ((1, 2, 3, 6, 7, 11), 10, 10, 11, 1),
    ((1, 2, 3, 4, 6, 8), 13, 13, 14, 1),
    ((1, 2, 3, 4, 6, 9), 12, 12, 13, 1),
    ((1, 2, 3, 4, 7, 8), 12, 12, 13, 1),
    ((1, 2, 3, 4, 7, 9), 11, 11, 12, 1),
    ((1, 2, 3, 4, 8, 9), 10, 10, 12, 2),
)


@dataclass(frozen=True)
class TableRow:
    gaps: tuple[int, ...]
    np_bound: int
    dim: int  # reproduced as NP; equal to dim M for genus <= 6
    dp_bound: int
    t1_plus: int

    def as_tuple(self):
        return (self.gaps, self.np_bound, self.dim, self.dp_bound, self.t1_plus)


def table1_rows() -> list[TableRow]:
    sgs = [s for s in enumerate_by_genus(6) if s.genus >= 1]
    rows = []
    for s in filter_non_negatively_graded(sgs):
        r = bounds_report(s)
        rows.append(TableRow(s.gaps, r.np_bound, r.np_bound, r.dp_bound, r.t1_plus))
    return rows


def table1_mismatches(rows: list[TableRow]) -> list[str]:
    key = lambda t: (len(t[0]), t[0])
    got = sorted((r.as_tuple() for r in rows), key=key)
    want = sorted(TABLE1, key=key)
    problems = []
    got_by_gaps = {r[0]: r for r in got}
    want_by_gaps = {r[0]: r for r in want}
    for gaps in sorted(set(got_by_gaps) | set(want_by_gaps), key=lambda g: (len(g), g)):
        a, b = got_by_gaps.get(gaps), want_by_gaps.get(gaps)
        if a != b:
            problems.append(f"gaps {gaps}: computed {a}, published {b}")
    return problems


@dataclass(frozen=True)
class Table2Row:
    family: int
    tau: int
    generators: tuple[int, ...]
    np_bound: int
    cfv_cs: int
    dp_bound: int
    t1_plus: int
    expected: tuple[int, int, int, int]

    @property
    def ok(self) -> bool:
        return (self.np_bound, self.cfv_cs, self.dp_bound, self.t1_plus) == self.expected


def table2_rows(tau_max: int) -> list[Table2Row]:
    rows = []
    for fam in (1, 2, 3):
        for tau in range(1, tau_max + 1):
            s = family_semigroup(fam, tau)
            r = bounds_report(s)
            e = family_expected_invariants(fam, tau)
            rows.append(
                Table2Row(
                    fam, tau, family_generators(fam, tau),
                    r.np_bound, e.cfv_cs, r.dp_bound, r.t1_plus,
                    (e.np_bound, e.cfv_cs, e.dp_bound, e.t1_plus),
                )
            )
    return rows


def _fmt_ints(xs) -> str:
    return ",".join(map(str, xs))


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


def reports_to_csv(reports: Iterable[BoundsReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=";", lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        row = r.to_row()
        w.writerow(
            [
                _fmt_ints(row["gaps"]), _fmt_ints(row["generators"]),
                *(row[c] for c in CSV_COLUMNS[2:9]),
                _fmt_bool(row["neg_graded"]), _fmt_bool(row["lemma_holds"]),
            ]
        )
    return buf.getvalue()


def csv_to_rows(text: str) -> list[dict]:
    reader = csv.DictReader(io.StringIO(text), delimiter=";")
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    out = []
    for rec in reader:
        row = {}
        for c in CSV_COLUMNS:
            v = rec[c]
            if c in ("gaps", "generators"):
                row[c] = [int(x) for x in v.split(",") if x]
            elif c in ("neg_graded", "lemma_holds"):
                row[c] = v == "true"
            else:
                row[c] = int(v)
        out.append(row)
    return out


def reports_to_json(reports: Iterable[BoundsReport], summary: dict | None = None) -> str:
    doc: dict = {"rows": [r.to_row() for r in reports]}
    if summary is not None:
        doc["summary"] = summary
    return json.dumps(doc, indent=1, sort_keys=False) + "\n"


def scan_summary(reports: list[BoundsReport]) -> dict:
    census = equality_census(reports)
    by_genus: dict[int, int] = {}
    for r in reports:
        by_genus[r.genus] = by_genus.get(r.genus, 0) + 1
    return {
        "semigroups": len(reports),
        "per_genus": {str(g): n for g, n in sorted(by_genus.items())},
        "lemma_counterexamples": len(census.violations),
        "equality": census.equal,
        "strict": len(census.strict),
        "strict_cases": [_fmt_ints(r.generators) for r in census.strict],
    }


def render_reports_table(reports: list[BoundsReport]) -> str:
    head = ("gaps", "generators", "g", "ewt", "lam", "NP", "D-P", "T1+", "conj", "neg", "lemma")
    body = [
        (
            _fmt_ints(r.gaps), _fmt_ints(r.generators), r.genus, r.ewt, r.lam,
            r.np_bound, r.dp_bound, r.t1_plus, r.conj_bound,
            "y" if r.negatively_graded else "n", "ok" if r.lemma_holds else "FAIL",
        )
        for r in reports
    ]
    return render_grid(head, body)


def render_grid(head, body) -> str:
    cells = [list(map(str, head))] + [list(map(str, row)) for row in body]
    widths = [max(len(row[i]) for row in cells) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def render_table1(rows: list[TableRow]) -> str:
    body = [(_fmt_ints(r.gaps), r.np_bound, f"{r.dim}*", r.dp_bound, r.t1_plus) for r in rows]
    text = render_grid(("gaps", "NP", "dim", "D-P", "dim T1+"), body)
    return text + "* dim column shows NP, which equals dim M for genus <= 6\n"


def render_table2(rows: list[Table2Row]) -> str:
    body = [
        (
            r.family, r.tau, _fmt_ints(r.generators), r.np_bound, r.cfv_cs, r.dp_bound,
            r.t1_plus, "/".join(map(str, r.expected)), "ok" if r.ok else "MISMATCH",
        )
        for r in rows
    ]
    text = render_grid(("family", "tau", "generators", "NP", "CFV-CS", "D-P", "T1+", "closed form", ""), body)
    return text + "CFV-CS is the closed-form upper bound; it is not recomputed\n"

