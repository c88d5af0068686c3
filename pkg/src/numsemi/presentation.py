"""Factorizations, Betti elements and minimal binomial presentations.

The ideal of the monomial curve (t^a_1, ..., t^a_r) is generated by pure
binomials X^alpha - X^beta with disjoint supports.  A minimal generating set
is read off the factorization graphs: at degree n the vertices are the
factorizations of n and two of them are adjacent when their supports meet.
A minimal presentation needs exactly (components - 1) binomials in degree
n, connecting the components.  For n > F + a_{r-1} + a_r the graph is
connected, because n - a_i - a_j > F is a member for every pair i, j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .errors import GenusZero
from .intlinalg import lattice_index
from .semigroup import NumericalSemigroup

Exponents = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Factorization:
    exponents: Exponents
    degree: int

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self.exponents) if e)


@dataclass(frozen=True)
class BinomialRelation:
    alpha: Factorization
    beta: Factorization

    @property
    def degree(self) -> int:
        return self.alpha.degree

    @property
    def lattice_vector(self) -> tuple[int, ...]:
        return tuple(x - y for x, y in zip(self.alpha.exponents, self.beta.exponents))

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha.exponents),
            "beta": list(self.beta.exponents),
            "degree": self.degree,
            "v": list(self.lattice_vector),
        }

    def pretty(self, names=None) -> str:
        r = len(self.alpha.exponents)
        names = names or [f"X_{i + 1}" for i in range(r)]
        return f"{_monomial(self.alpha.exponents, names)} - {_monomial(self.beta.exponents, names)}"


def _monomial(exps, names) -> str:
    parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, exps) if e]
    return "*".join(parts) or "1"


@dataclass(frozen=True)
class Presentation:
    generators: tuple[int, ...]
    relations: tuple[BinomialRelation, ...]

    @property
    def betti_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(rel.degree for rel in self.relations))

    def to_json(self) -> list[dict]:
        return [rel.to_json() for rel in self.relations]


def _factor(gens: tuple[int, ...], n: int) -> list[Exponents]:
    return list(_factor_from(gens, n, 0))


@lru_cache(maxsize=200_000)
def _factor_from(gens: tuple[int, ...], n: int, start: int) -> tuple[Exponents, ...]:
    # all nonnegative solutions in gens[start:], lexicographically ascending
    if start == len(gens) - 1:
        a = gens[start]
        return ((n // a,),) if n % a == 0 else ()
    a = gens[start]
    out = []
    for k in range(0, n // a + 1):
        for tail in _factor_from(gens, n - k * a, start + 1):
            out.append((k,) + tail)
    return tuple(out)


def factorizations(s: NumericalSemigroup, n: int) -> list[Factorization]:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n not in s:
        return []
    return [Factorization(e, n) for e in _factor(s.generators, n)]


def _components(facts: list[Exponents]) -> list[list[Exponents]]:
    """Connected components of the support-sharing graph, each sorted,
    listed in order of their lexicographically smallest member."""
    r = len(facts[0])
    parent = list(range(len(facts)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for j in range(r):
        holders = [i for i, f in enumerate(facts) if f[j]]
        for i in holders[1:]:
            parent[find(i)] = find(holders[0])
    groups: dict[int, list[Exponents]] = {}
    for i, f in enumerate(facts):
        groups.setdefault(find(i), []).append(f)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def betti_search_bound(s: NumericalSemigroup) -> int:
    gens = s.generators
    return s.frobenius + gens[-2] + gens[-1]


def _require(s: NumericalSemigroup) -> None:
    if s.genus == 0 or len(s.generators) < 2:
        raise GenusZero("presentations are computed for genus >= 1")


def factorization_components(s: NumericalSemigroup, bound: int | None = None) -> dict[int, list[list[Exponents]]]:
    """Degrees with a disconnected factorization graph, mapped to their components."""
    _require(s)
    bound = betti_search_bound(s) if bound is None else bound
    out = {}
    for n in range(2, bound + 1):
        if n not in s:
            continue
        facts = _factor(s.generators, n)
        if len(facts) < 2:
            continue
        comps = _components(facts)
        if len(comps) > 1:
            out[n] = comps
    return out


def betti_elements(s: NumericalSemigroup, bound: int | None = None) -> tuple[int, ...]:
    """Betti degrees with multiplicity (components - 1), sorted."""
    comps = factorization_components(s, bound)
    return tuple(n for n, c in sorted(comps.items()) for _ in range(len(c) - 1))


TieBreak = Literal["lexmax", "lexmin"]


def minimal_presentation(s: NumericalSemigroup, tie_break: TieBreak = "lexmax") -> Presentation:
    """Minimal binomial generating set of the monomial-curve ideal.

    At each Betti degree one binomial joins every component to a base
    component.  ``"lexmax"`` represents a component by its lex-largest
    factorization and takes the component with the largest representative
    as base, which favours pure powers of the first generator on the right
    hand side.  ``"lexmin"`` uses lex-smallest representatives and the
    component with the smallest one as base.  Both give the same Betti
    multiset.
    """
    relations = []
    for n, comps in sorted(factorization_components(s).items()):
        if tie_break == "lexmax":
            reps = sorted(c[-1] for c in comps)
            base = reps.pop()
        elif tie_break == "lexmin":
            reps = sorted(c[0] for c in comps)
            base = reps.pop(0)
        else:
            raise ValueError(f"unknown tie break {tie_break!r}")
        for rep in reps:
            alpha, beta = _cancel(rep, base)
            d = _dot(alpha, s.generators)
            relations.append(BinomialRelation(Factorization(alpha, d), Factorization(beta, d)))
    return Presentation(s.generators, tuple(relations))


def _dot(u, v) -> int:
    return sum(x * y for x, y in zip(u, v))


def _cancel(u: Exponents, w: Exponents) -> tuple[Exponents, Exponents]:
    common = [min(x, y) for x, y in zip(u, w)]
    return (
        tuple(x - c for x, c in zip(u, common)),
        tuple(y - c for y, c in zip(w, common)),
    )


@dataclass(frozen=True)
class Verdict:
    ok: bool
    check: str = ""
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate_presentation(s: NumericalSemigroup, p: Presentation) -> Verdict:
    """Soundness checks; returns the first violated one, never raises."""
    gens = s.generators
    r = len(gens)
    try:
        for rel in p.relations:
            v = rel.lattice_vector
            if len(v) != r or _dot(v, gens) != 0:
                return Verdict(False, "orthogonality", f"v={v} is not orthogonal to {gens}")
        for rel in p.relations:
            # X_j <- t^{a_j}: both monomials become t^{weight}
            da, db = _dot(rel.alpha.exponents, gens), _dot(rel.beta.exponents, gens)
            if da != db:
                return Verdict(False, "parametrization", f"{rel.pretty()} maps to t^{da} - t^{db}")
            if da != rel.degree:
                return Verdict(False, "parametrization", f"{rel.pretty()} has weight {da}, recorded {rel.degree}")
            if any(x and y for x, y in zip(rel.alpha.exponents, rel.beta.exponents)):
                return Verdict(False, "disjoint supports", rel.pretty())
        vectors = [rel.lattice_vector for rel in p.relations]
        idx = lattice_index(vectors, r - 1) if vectors else None
        if idx is None:
            return Verdict(False, "kernel lattice", f"rank differs from {r - 1}")
        if idx != 1:
            return Verdict(False, "kernel lattice", f"lattice index {idx}")
    except Exception as exc:  # structured failure, never propagate
        return Verdict(False, "exception", repr(exc))
    return Verdict(True)
