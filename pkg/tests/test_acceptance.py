"""Exit criteria.  Each test records one PASS/FAIL line, printed in the terminal summary."""

import time
from contextlib import contextmanager

import pytest

from numsemi.bounds import bounds_report, reports_up_to
from numsemi.cotangent import t1_graded, t1_proof_identity_check
from numsemi.enumeration import counts_by_genus, enumerate_by_genus, filter_non_negatively_graded
from numsemi.families import (
    family_expected_invariants,
    family_initial_forms,
    family_semigroup,
    family_syzygies,
    form_index,
    verify_parametrization,
    verify_syzygies,
)
from numsemi.presentation import betti_elements, minimal_presentation, validate_presentation
from numsemi.report import TABLE1
from numsemi.semigroup import effective_weight, end_lambda, from_generators

from .oracles import semigroup_gap_sets

RESULTS: list[str] = []


@contextmanager
def criterion(label, limit=None):
    t0 = time.perf_counter()
    status, note = "FAIL", ""
    try:
        yield
        elapsed = time.perf_counter() - t0
        if limit is not None and elapsed >= limit:
            note = f" (took {elapsed:.2f}s, limit {limit}s)"
            raise AssertionError(f"{label}: runtime {elapsed:.2f}s >= {limit}s")
        status, note = "PASS", f" ({elapsed:.2f}s)"
    finally:
        line = f"[{status}] {label}{note}"
        RESULTS.append(line)
        print(line)


def test_ac01_table1():
    with criterion("AC1 Table 1: 15 gap sets, NP / D-P / T1+ exact", limit=10):
        sgs = [s for s in enumerate_by_genus(6) if s.genus >= 1]
        got = {}
        for s in filter_non_negatively_graded(sgs):
            r = bounds_report(s)
            got[s.gaps] = (r.np_bound, r.dp_bound, r.t1_plus)
        want = {row[0]: (row[1], row[3], row[4]) for row in TABLE1}
        assert got == want
        assert got[(1, 2, 4, 5, 8)] == (9, 10, 1)
        assert got[(1, 2, 3, 4, 8, 9)] == (10, 12, 2)


def test_ac02_worked_examples():
    with criterion("AC2 <6,7,8> and <6,7,15> bounds", limit=1):
        s = from_generators([6, 7, 8])
        r = bounds_report(s)
        assert (effective_weight(s), r.np_bound, end_lambda(s).lam, r.dp_bound, r.t1_plus, r.conj_bound) == (
            12, 13, 1, 17, 3, 14,
        )
        r = bounds_report(from_generators([6, 7, 15]))
        assert (r.np_bound, r.dp_bound, r.conj_bound) == (17, 23, 18)


def test_ac03_family_formulas():
    with criterion("AC3 family closed forms, tau = 1..10", limit=60):
        for tau in range(1, 11):
            t = tau
            want = {
                1: (3 + 6 * t, 8 * t + 7, 12 * t + 5, 4 * t - 2, 11 * t + 8),
                2: (6 + 6 * t, 8 * t + 11, 12 * t + 11, 4 * t, 11 * t + 15),
                3: (None, 8 * t + 5, 12 * t + 1, 4 * t - 4, None),
            }
            for fam, (g, np_, dp, tp, tm) in want.items():
                s = family_semigroup(fam, tau)
                r = bounds_report(s)
                if g is not None:
                    assert s.genus == g
                assert (r.np_bound, r.dp_bound, r.t1_plus) == (np_, dp, tp), (fam, tau)
                if tm is not None:
                    assert t1_graded(s).t1_minus == tm, (fam, tau)
                e = family_expected_invariants(fam, tau)
                assert (e.np_bound, e.dp_bound, e.t1_plus, e.t1_minus) == (np_, dp, tp, tm)


def test_ac04_family_ideals():
    with criterion("AC4 family presentations = printed initial forms, tau = 1..5"):
        for fam in (1, 2):
            for tau in range(1, 6):
                p = minimal_presentation(family_semigroup(fam, tau))
                forms = family_initial_forms(fam, tau)
                ours = {frozenset((r.alpha.exponents, r.beta.exponents)) for r in p.relations}
                theirs = {frozenset(f.terms) for f in forms.values()}
                assert len(p.relations) == 9 and ours == theirs, (fam, tau)
                assert list(p.betti_degrees) == sorted(12 * tau + form_index(n) for n in forms)


def test_ac05_syzygies():
    errata = sum(1 for fam in (1, 2) for z in family_syzygies(fam) if z.printed is not None)
    with criterion(f"AC5 6 + 7 syzygies vanish, 18 forms on the curve, tau = 1..10 ({errata} printed typos corrected)"):
        assert len(family_syzygies(1)) == 6 and len(family_syzygies(2)) == 7
        for tau in range(1, 11):
            for fam in (1, 2):
                assert verify_syzygies(fam, tau).ok, (fam, tau)
                assert verify_parametrization(fam, tau).ok, (fam, tau)


def test_ac06_final_lemma(genus10):
    with criterion("AC6 lemma and proof identity, genus <= 10", limit=60):
        reports = reports_up_to(10)
        assert len(reports) >= 300
        assert [r for r in reports if not r.lemma_holds] == []
        for s in genus10:
            assert t1_proof_identity_check(s).ok, s


def test_ac07_presentation_oracle():
    with criterion("AC7 presentations validate and Betti multisets are tie-break invariant, genus <= 8"):
        for s in enumerate_by_genus(8):
            if s.genus == 0:
                continue
            p = minimal_presentation(s)
            v = validate_presentation(s, p)
            assert v, (s, v)
            q = minimal_presentation(s, "lexmin")
            assert validate_presentation(s, q)
            assert p.betti_degrees == q.betti_degrees == betti_elements(s)


def test_ac08_enumeration_oracle():
    with criterion("AC8 per-genus counts match brute force, g <= 7", limit=30):
        counts = counts_by_genus(enumerate_by_genus(7))
        brute = {g: len(semigroup_gap_sets(g)) for g in range(0, 8)}
        assert counts == brute
        assert [counts[g] for g in range(1, 8)] == [1, 2, 4, 7, 12, 23, 39]


def test_ac09_negatively_graded_identity():
    with criterion("AC9 negatively graded => 3g-2-ewt = 2g-2+lambda, genus <= 10"):
        n = 0
        for r in reports_up_to(10):
            if r.t1_plus == 0:
                n += 1
                assert 3 * r.genus - 2 - r.ewt == 2 * r.genus - 2 + r.lam, r
        assert n > 0


def test_ac10_cusp_micro_oracle():
    with criterion("AC10 T1 of <2,3> and <2,5>"):
        assert t1_graded(from_generators([2, 3])).by_degree == {-4: 1, -6: 1}
        assert t1_graded(from_generators([2, 5])).by_degree == {-4: 1, -6: 1, -8: 1, -10: 1}
