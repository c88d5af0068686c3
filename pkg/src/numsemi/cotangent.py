"""Graded pieces of T1 of the semigroup algebra k[N] (characteristic 0).

For a degree l outside End(N),

    dim T1_l = #{i : a_i + l not in N} - dim V_l - 1,

where V_l is the rational span of the lattice vectors v_i of the minimal
binomial generators whose weight d_i satisfies d_i + l not in N.  For l in
End(N) the graded piece vanishes.  Negative integers are never members.

Only l in [-max d_i, F - a_1] can contribute: below, every v_i is active,
so V_l has rank r - 1 and |A_l| = r; above, l is in End(N).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GenusZero, NegativeDimension
from .intlinalg import rank
from .presentation import Presentation, minimal_presentation
from .semigroup import NumericalSemigroup, end_lambda, is_endo_degree


@dataclass(frozen=True)
class DegreeCell:
    degree: int
    a_count: int
    v_dim: int

    @property
    def value(self) -> int:
        return self.a_count - self.v_dim - 1


@dataclass(frozen=True)
class GradedT1:
    by_degree: dict[int, int] = field(default_factory=dict)

    @property
    def t1_plus(self) -> int:
        return sum(d for l, d in self.by_degree.items() if l > 0)

    @property
    def t1_minus(self) -> int:
        return sum(d for l, d in self.by_degree.items() if l < 0)

    def to_json(self) -> dict:
        return {
            "by_degree": {str(l): d for l, d in sorted(self.by_degree.items())},
            "t1_plus": self.t1_plus,
            "t1_minus": self.t1_minus,
        }


def _require(s: NumericalSemigroup) -> None:
    if s.genus == 0:
        raise GenusZero("T1 is computed for genus >= 1")


def degree_cell(s: NumericalSemigroup, p: Presentation, l: int) -> DegreeCell:
    a_count = sum(1 for a in s.generators if a + l not in s)
    active = [rel.lattice_vector for rel in p.relations if rel.degree + l not in s]
    return DegreeCell(l, a_count, rank(active))


def t1_dimension(s: NumericalSemigroup, p: Presentation, l: int) -> int:
    if is_endo_degree(s, l):
        return 0
    cell = degree_cell(s, p, l)
    if cell.value < 0:
        raise NegativeDimension(l, cell.a_count, cell.v_dim)
    return cell.value


def scan_window(s: NumericalSemigroup, p: Presentation) -> range:
    lo = -max(p.betti_degrees)
    hi = s.frobenius - s.generators[0]
    return range(lo, hi + 1)


def t1_graded(
    s: NumericalSemigroup, p: Presentation | None = None, window: range | None = None
) -> GradedT1:
    _require(s)
    p = minimal_presentation(s) if p is None else p
    window = scan_window(s, p) if window is None else window
    dims = {}
    for l in window:
        d = t1_dimension(s, p, l)
        if d:
            dims[l] = d
    return GradedT1(dims)


def is_negatively_graded(s: NumericalSemigroup) -> bool:
    return t1_graded(s).t1_plus == 0


@dataclass(frozen=True)
class IdentityCheck:
    ok: bool
    t1_plus: int
    rhs: int


def t1_proof_identity_check(s: NumericalSemigroup) -> IdentityCheck:
    """Compare t1_plus with sum over l > 0 outside End of (|A_l| - dim V_l), minus g, plus lambda."""
    _require(s)
    p = minimal_presentation(s)
    lhs = t1_graded(s, p).t1_plus
    total = 0
    # positive degrees outside End(N) are gaps, so they lie in [1, F]
    for l in range(1, s.frobenius + 1):
        if is_endo_degree(s, l):
            continue
        cell = degree_cell(s, p, l)
        total += cell.a_count - cell.v_dim
    rhs = total - s.genus + end_lambda(s).lam
    return IdentityCheck(lhs == rhs, lhs, rhs)
