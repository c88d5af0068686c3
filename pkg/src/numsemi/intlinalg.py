"""Exact integer linear algebra on small dense matrices (lists of rows)."""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    a = [list(map(int, r)) for r in rows if any(r)]
    if not a:
        return 0
    m, n = len(a), len(a[0])
    r = 0
    prev = 1
    for c in range(n):
        if r == m:
            break
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, m):
            for j in range(c + 1, n):
                a[i][j] = (p * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = p
        r += 1
    return r


def smith_invariants(rows: Sequence[Sequence[int]]) -> list[int]:
    """Nonzero invariant factors d_1 | d_2 | ... of an integer matrix.

    Only the diagonal is returned; the transforms are not needed here.
    """
    a = [list(map(int, r)) for r in rows]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    diag = []
    t = 0
    while t < min(m, n):
        # pick the nonzero entry of least absolute value in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # enforce divisibility of the trailing block by the pivot
                bad = next(
                    (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad])]
                continue
            # move the smallest remainder into the pivot position
            cands = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
            cands += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            _, i, j = min(cands)
            if j == t:
                a[t], a[i] = a[i], a[t]
            else:
                for row in a:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def lattice_index(rows: Sequence[Sequence[int]], expected_rank: int) -> int | None:
    """Index of the lattice spanned by ``rows`` inside its saturation.

    Returns None when the rank differs from ``expected_rank``.  For a
    sublattice of a saturated lattice of that rank, index 1 means equality.
    """
    inv = smith_invariants(rows)
    if len(inv) != expected_rank:
        return None
    out = 1
    for d in inv:
        out *= d
    return out
