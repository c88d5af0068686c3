"""Pflueger and Deligne-Pinkham bounds and the T1-corrected upper bound."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cotangent import t1_graded
from .enumeration import enumerate_by_genus
from .errors import GenusZero
from .semigroup import NumericalSemigroup, effective_weight, end_lambda


@dataclass(frozen=True)
class BoundsReport:
    gaps: tuple[int, ...]
    generators: tuple[int, ...]
    genus: int
    ewt: int
    lam: int
    np_bound: int
    dp_bound: int
    t1_plus: int
    conj_bound: int
    negatively_graded: bool
    lemma_holds: bool

    @property
    def equality(self) -> bool:
        return self.np_bound == self.conj_bound

    def to_row(self) -> dict:
        """Flat record with the CSV column names."""
        return {
            "gaps": list(self.gaps),
            "generators": list(self.generators),
            "genus": self.genus,
            "ewt": self.ewt,
            "lambda": self.lam,
            "np": self.np_bound,
            "dp": self.dp_bound,
            "t1_plus": self.t1_plus,
            "conj": self.conj_bound,
            "neg_graded": self.negatively_graded,
            "lemma_holds": self.lemma_holds,
        }


def bounds_report(s: NumericalSemigroup) -> BoundsReport:
    if s.genus == 0:
        raise GenusZero("bounds need genus >= 1")
    g = s.genus
    ewt = effective_weight(s)
    lam = end_lambda(s).lam
    t1p = t1_graded(s).t1_plus
    np_bound = 3 * g - 2 - ewt
    dp_bound = 2 * g - 2 + lam
    conj = dp_bound - t1p
    return BoundsReport(
        gaps=s.gaps,
        generators=s.generators,
        genus=g,
        ewt=ewt,
        lam=lam,
        np_bound=np_bound,
        dp_bound=dp_bound,
        t1_plus=t1p,
        conj_bound=conj,
        negatively_graded=t1p == 0,
        lemma_holds=np_bound <= conj,
    )


def reports_up_to(max_genus: int, jobs: int = 1) -> list[BoundsReport]:
    sgs = [s for s in enumerate_by_genus(max_genus, jobs=jobs) if s.genus >= 1]
    if jobs <= 1:
        return [bounds_report(s) for s in sgs]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(bounds_report, sgs, chunksize=16))


def scan_lemma(max_genus: int, jobs: int = 1) -> list[BoundsReport]:
    """Semigroups of genus in [1, max_genus] with np_bound > conj_bound."""
    return [r for r in reports_up_to(max_genus, jobs) if not r.lemma_holds]


@dataclass
class EqualityCensus:
    equal: int
    strict: list[BoundsReport]
    violations: list[BoundsReport]

    @property
    def total(self) -> int:
        return self.equal + len(self.strict) + len(self.violations)


def equality_census(reports: Iterable[BoundsReport]) -> EqualityCensus:
    """Split by np_bound == conj_bound versus np_bound < conj_bound."""
    equal, strict, bad = 0, [], []
    for r in reports:
        if r.np_bound == r.conj_bound:
            equal += 1
        elif r.np_bound < r.conj_bound:
            strict.append(r)
        else:
            bad.append(r)
    return EqualityCensus(equal, strict, bad)
