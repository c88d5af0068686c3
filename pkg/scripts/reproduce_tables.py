"""Recompute the genus <= 6 table and the tau-family table and diff them against the printed values."""

import argparse
import sys

from numsemi import report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tau-max", type=int, default=5)
    args = ap.parse_args()

    rows = report.table1_rows()
    print(report.render_table1(rows))
    problems = report.table1_mismatches(rows)
    for p in problems:
        print("MISMATCH", p)

    fam_rows = report.table2_rows(args.tau_max)
    print(report.render_table2(fam_rows))
    bad = [r for r in fam_rows if not r.ok]

    print(f"table 1: {len(rows)} rows, {len(problems)} mismatches")
    print(f"table 2: {len(fam_rows)} rows, {len(bad)} mismatches")
    return 1 if problems or bad else 0


if __name__ == "__main__":
    sys.exit(main())
