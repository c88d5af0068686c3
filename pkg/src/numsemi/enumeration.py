"""Enumeration of numerical semigroups by genus along the semigroup tree.

Children of a node are obtained by removing a minimal generator larger than
its Frobenius number.  Every semigroup of genus g+1 arises exactly once this
way (its parent is the semigroup with its Frobenius number added back), so a
depth-first walk visits each semigroup once.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import CapExceeded
from .semigroup import NumericalSemigroup, _from_table, from_generators

log = logging.getLogger(__name__)

GENUS_CAP = 25


@dataclass(frozen=True)
class TreeNode:
    semigroup: NumericalSemigroup

    @property
    def effective_generators(self) -> tuple[int, ...]:
        f = self.semigroup.frobenius
        return tuple(a for a in self.semigroup.generators if a > f)

    def children(self) -> list[TreeNode]:
        return [TreeNode(remove_generator(self.semigroup, a)) for a in self.effective_generators]


def remove_generator(s: NumericalSemigroup, x: int) -> NumericalSemigroup:
    """The semigroup s minus {x}; x must be a minimal generator."""
    if x not in s.generators:
        raise ValueError(f"{x} is not a minimal generator of <{s}>")
    top = x + 2 * s.generators[-1] + 2
    member = [n in s and n != x for n in range(top)]
    return _from_table(member)


def parent(s: NumericalSemigroup) -> NumericalSemigroup:
    """Inverse of the tree step: add the Frobenius number back."""
    if s.genus == 0:
        raise ValueError("the root <1> has no parent")
    top = s.frobenius + 2 * s.generators[-1] + 2
    return _from_table([n in s or n == s.frobenius for n in range(top)])


def _subtree(root: NumericalSemigroup, max_genus: int) -> list[NumericalSemigroup]:
    out = []
    stack = [TreeNode(root)]
    while stack:
        node = stack.pop()
        out.append(node.semigroup)
        if node.semigroup.genus < max_genus:
            stack.extend(node.children())
    return out


def _check_cap(max_genus: int, cap: int) -> None:
    if max_genus > cap:
        raise CapExceeded(f"genus {max_genus} exceeds the configured cap {cap}")
    if max_genus < 0:
        raise ValueError("genus bound must be nonnegative")


def enumerate_by_genus(
    max_genus: int, jobs: int = 1, cap: int = GENUS_CAP, split_genus: int = 4
) -> list[NumericalSemigroup]:
    """All numerical semigroups of genus <= max_genus, sorted by (genus, gaps).

    With ``jobs > 1`` the subtrees rooted at genus ``split_genus`` are
    expanded in separate processes; the merged result is sorted, so the
    output does not depend on the worker count.
    """
    _check_cap(max_genus, cap)
    root = from_generators([1])
    if jobs <= 1 or max_genus <= split_genus:
        result = _subtree(root, max_genus)
    else:
        head, frontier = [], [TreeNode(root)]
        while frontier and frontier[0].semigroup.genus < split_genus:
            head.extend(n.semigroup for n in frontier)
            frontier = [c for n in frontier for c in n.children()]
        log.debug("splitting %d subtrees over %d workers", len(frontier), jobs)
        result = list(head)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            roots = [n.semigroup for n in frontier]
            for part in pool.map(_subtree, roots, [max_genus] * len(roots)):
                result.extend(part)
    result.sort(key=lambda s: s.sort_key)
    return result


def iter_by_genus(max_genus: int, jobs: int = 1, cap: int = GENUS_CAP) -> Iterator[NumericalSemigroup]:
    yield from enumerate_by_genus(max_genus, jobs=jobs, cap=cap)


def counts_by_genus(semigroups: Iterable[NumericalSemigroup]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for s in semigroups:
        counts[s.genus] = counts.get(s.genus, 0) + 1
    return dict(sorted(counts.items()))


def filter_non_negatively_graded(semigroups: Iterable[NumericalSemigroup]) -> Iterator[NumericalSemigroup]:
    """Keep the semigroups whose T1 has a nonzero positive part."""
    from .cotangent import t1_graded

    for s in semigroups:
        if s.genus >= 1 and t1_graded(s).t1_plus >= 1:
            yield s
