"""Check NP <= D-P - dim T1+ for every semigroup up to a genus and report where equality fails."""

import argparse
import sys
import time

from numsemi.bounds import equality_census, reports_up_to


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--genus-max", type=int, default=10)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = reports_up_to(args.genus_max, jobs=args.jobs)
    census = equality_census(reports)
    elapsed = time.perf_counter() - t0

    print(f"genus <= {args.genus_max}: {census.total} semigroups in {elapsed:.1f}s")
    print(f"  NP == conj: {census.equal}")
    print(f"  NP <  conj: {len(census.strict)}")
    print(f"  NP >  conj: {len(census.violations)}")
    for r in census.strict:
        print(f"    strict  <{','.join(map(str, r.generators))}>  g={r.genus}  NP={r.np_bound}  conj={r.conj_bound}")
    for r in census.violations:
        print(f"    VIOLATION <{','.join(map(str, r.generators))}>  NP={r.np_bound}  conj={r.conj_bound}")
    return 1 if census.violations else 0


if __name__ == "__main__":
    sys.exit(main())
