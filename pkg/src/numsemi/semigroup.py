"""Numerical semigroups and their elementary invariants.

A numerical semigroup is stored through its gap set, from which the
Frobenius number, the membership table and the minimal generators follow.
Instances are immutable and hashable, so they can be shared across worker
processes and used as dictionary keys.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, reduce

from .errors import (
    EmptyInput,
    GcdError,
    GenusZero,
    InputTooLarge,
    NotAMember,
    NotASemigroup,
)

# Keeps the membership table (size ~ Frobenius number) bounded.
MAX_GENERATOR = 2000


@dataclass(frozen=True)
class EndSet:
    endo_gaps: tuple[int, ...]

    @property
    def lam(self) -> int:
        return len(self.endo_gaps)


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    generators: tuple[int, ...]
    gaps: tuple[int, ...]
    # membership[n] for 0 <= n <= F + 1 + max(generators)
    _table: tuple[bool, ...] = field(repr=False)

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        return self.gaps[-1] if self.gaps else -1

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < len(self._table):
            return self._table[n]
        return True

    def __eq__(self, other):
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self):
        return hash(self.gaps)

    def __lt__(self, other: NumericalSemigroup) -> bool:
        return self.sort_key < other.sort_key

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.genus, self.gaps)

    @cached_property
    def nongaps(self) -> tuple[int, ...]:
        """Positive members up to and including F + 1."""
        return tuple(n for n in range(1, self.frobenius + 2) if n in self)

    def __str__(self) -> str:
        return ",".join(map(str, self.generators))

    def to_text(self, use_gaps: bool = False) -> str:
        if use_gaps:
            return "gaps:" + ",".join(map(str, self.gaps))
        return str(self)

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "gaps": list(self.gaps),
            "genus": self.genus,
            "frobenius": self.frobenius,
            "symmetric": is_symmetric(self) if self.genus else True,
        }


def _from_table(member: list[bool]) -> NumericalSemigroup:
    """Build the canonical object from a membership list that already
    contains a run of ``multiplicity`` consecutive members at its end."""
    gaps = tuple(n for n, m in enumerate(member) if not m)
    frob = gaps[-1] if gaps else -1
    mult = next(n for n in range(1, len(member) + 1) if n >= len(member) or member[n])
    limit = max(frob + mult, mult)  # every minimal generator is <= F + m

    def mem(n):
        return n >= len(member) or member[n]

    positives = [n for n in range(1, limit + 1) if mem(n)]
    gens = []
    for n in positives:
        if not any(mem(n - k) for k in positives if 2 * k <= n):
            gens.append(n)
    top = frob + 1 + gens[-1]
    table = tuple(mem(n) for n in range(top + 1))
    return NumericalSemigroup(tuple(gens), gaps, table)


def from_generators(gens) -> NumericalSemigroup:
    gens = sorted(set(int(a) for a in gens))
    if not gens:
        raise EmptyInput("generator list is empty")
    if gens[0] <= 0:
        raise NotASemigroup(f"generators must be positive, got {gens[0]}")
    if gens[-1] > MAX_GENERATOR:
        raise InputTooLarge(f"generator {gens[-1]} exceeds {MAX_GENERATOR}")
    if reduce(math.gcd, gens) != 1:
        raise GcdError(f"gcd of {gens} is {reduce(math.gcd, gens)}, not 1")
    m = gens[0]
    member = [True]
    run = 1 if m == 1 else 0
    n = 0
    # close under addition until m consecutive members appear
    while run < m:
        n += 1
        ok = any(n >= a and member[n - a] for a in gens)
        member.append(ok)
        run = run + 1 if ok else 0
    return _from_table(member)


def from_gaps(gaps) -> NumericalSemigroup:
    gaps = sorted(set(int(x) for x in gaps))
    if gaps and gaps[0] <= 0:
        raise NotASemigroup("gaps must be positive integers")
    frob = gaps[-1] if gaps else -1
    gapset = set(gaps)
    member = [n not in gapset for n in range(frob + 2)]
    members = [n for n in range(1, frob + 1) if member[n]]
    for i, x in enumerate(members):
        for y in members[i:]:
            if x + y > frob:
                break
            if not member[x + y]:
                raise NotASemigroup(f"{x} + {y} = {x + y} is listed as a gap")
    # pad so the table ends with a run of multiplicity-many members
    mult = members[0] if members else frob + 1
    member.extend([True] * mult)
    return _from_table(member)


def parse_semigroup(text: str) -> NumericalSemigroup:
    """Parse ``"6,7,8"`` (generators) or ``"gaps:1,2,4,5,8"``."""
    text = text.strip()
    if text.startswith("gaps:"):
        body = text[len("gaps:"):].strip()
        return from_gaps([int(x) for x in body.split(",") if x.strip()])
    return from_generators([int(x) for x in text.split(",") if x.strip()])


def is_symmetric(s: NumericalSemigroup) -> bool:
    if s.genus == 0:
        raise GenusZero("symmetry is defined for genus >= 1")
    f = s.frobenius
    by_frobenius = f == 2 * s.genus - 1
    by_duality = all((n in s) != (f - n in s) for n in range(0, f + 1))
    assert by_frobenius == by_duality, s
    return by_frobenius


def apery_set(s: NumericalSemigroup, n: int) -> tuple[int, ...]:
    """Smallest member of each residue class mod ``n``, sorted."""
    if n <= 0 or n not in s:
        raise NotAMember(f"{n} is not a positive member of <{s}>")
    best: dict[int, int] = {}
    k = 0
    while len(best) < n:
        if k in s and k % n not in best:
            best[k % n] = k
        k += 1
    return tuple(sorted(best.values()))


def is_endo_degree(s: NumericalSemigroup, z: int) -> bool:
    """True iff z + n lies in s for every positive nongap n.

    Only nongaps n <= F - z matter; larger ones land above the Frobenius number.
    """
    f = s.frobenius
    for n in itertools.chain(s.nongaps, range(f + 2, f - z + 1)):
        if z + n > f:
            return True
        if z + n not in s:
            return False
    return True


def end_lambda(s: NumericalSemigroup) -> EndSet:
    if s.genus == 0:
        raise GenusZero("lambda needs at least one gap")
    return EndSet(tuple(l for l in s.gaps if is_endo_degree(s, l)))


def effective_weight(s: NumericalSemigroup) -> int:
    if s.genus == 0:
        raise GenusZero("effective weight needs at least one gap")
    return sum(sum(1 for a in s.generators if a < l) for l in s.gaps)


def weight(s: NumericalSemigroup) -> int:
    """Classical Weierstrass weight, sum of (l_i - i)."""
    return sum(l - i for i, l in enumerate(s.gaps, start=1))
