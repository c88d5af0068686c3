import pytest
from hypothesis import given, strategies as st

from numsemi.errors import EmptyInput, GcdError, GenusZero, InputTooLarge, NotAMember, NotASemigroup
from numsemi.semigroup import (
    apery_set,
    effective_weight,
    end_lambda,
    from_gaps,
    from_generators,
    is_endo_degree,
    is_symmetric,
    parse_semigroup,
    weight,
)

from .conftest import semigroups
from .oracles import closure, gaps_of


@pytest.mark.parametrize(
    "gens, genus, frob, gaps",
    [
        ([6, 7, 8], 9, 17, (1, 2, 3, 4, 5, 9, 10, 11, 17)),
        ([1], 0, -1, ()),
        ([2, 3], 1, 1, (1,)),
        ([3, 4, 5], 2, 2, (1, 2)),
    ],
)
def test_from_generators_examples(gens, genus, frob, gaps):
    s = from_generators(gens)
    assert (s.genus, s.frobenius, s.gaps) == (genus, frob, gaps)


def test_redundant_generators_are_pruned():
    assert from_generators([6, 7, 8, 12, 13, 20]).generators == (6, 7, 8)
    assert from_generators([3, 5, 7, 9, 10]).generators == (3, 5, 7)


def test_from_generators_errors():
    with pytest.raises(EmptyInput):
        from_generators([])
    with pytest.raises(GcdError):
        from_generators([4, 6, 10])
    with pytest.raises(NotASemigroup):
        from_generators([0, 1])
    with pytest.raises(InputTooLarge):
        from_generators([2, 10**6 + 1])


def test_from_gaps_examples():
    assert from_gaps([1, 2, 4, 5, 8]).generators == (3, 7, 11)
    assert from_gaps([1]).generators == (2, 3)
    assert from_gaps([]).generators == (1,)
    with pytest.raises(NotASemigroup):
        from_gaps([2])
    with pytest.raises(NotASemigroup):
        from_gaps([1, 3, 4])  # 2 + 2 = 4
    assert from_gaps([1, 2, 3, 4, 8]).generators == (5, 6, 7, 9)


def test_parse_textual_forms():
    assert parse_semigroup("6,7,8").genus == 9
    assert parse_semigroup("gaps:1,2,4,5,8").generators == (3, 7, 11)


@pytest.mark.parametrize("gens, expected", [([6, 7, 8], True), ([3, 4, 5], False), ([2, 3], True), ([6, 7, 15], True)])
def test_is_symmetric(gens, expected):
    assert is_symmetric(from_generators(gens)) is expected


def test_is_symmetric_rejects_genus_zero():
    with pytest.raises(GenusZero):
        is_symmetric(from_generators([1]))


def _apery_oracle(gens, n):
    members = sorted(closure(gens, 4 * n * max(gens)))
    out = {}
    for m in members:
        out.setdefault(m % n, m)
    return tuple(sorted(out.values()))


@pytest.mark.parametrize("gens, n", [([2, 3], 2), ([6, 7, 8], 6), ([3, 7, 11], 3), ([6, 7, 15], 7)])
def test_apery_set_against_scan(gens, n):
    got = apery_set(from_generators(gens), n)
    assert got == _apery_oracle(gens, n)
    assert len(got) == n and 0 in got


def test_apery_set_values():
    assert apery_set(from_generators([2, 3]), 2) == (0, 3)
    assert apery_set(from_generators([3, 7, 11]), 3) == (0, 7, 11)
    # one element per residue class mod 6
    assert apery_set(from_generators([6, 7, 8]), 6) == (0, 7, 8, 15, 16, 23)


def test_apery_set_requires_member():
    with pytest.raises(NotAMember):
        apery_set(from_generators([2, 3]), 1)


def test_end_lambda_examples():
    assert end_lambda(from_gaps([1, 2, 4, 5, 8])).endo_gaps == (4, 8)
    assert end_lambda(from_generators([6, 7, 8])).lam == 1
    assert end_lambda(from_generators([2, 3])).endo_gaps == (1,)


def test_is_endo_degree_examples():
    s23 = from_generators([2, 3])
    assert is_endo_degree(s23, 1)
    assert not is_endo_degree(s23, -1)
    assert not is_endo_degree(from_generators([6, 7, 8]), 11)


def test_effective_weight_examples():
    assert effective_weight(from_generators([6, 7, 8])) == 12
    assert effective_weight(from_gaps([1, 2, 4, 5, 8])) == 4
    assert effective_weight(from_generators([2, 3])) == 0


@given(semigroups())
def test_gaps_match_closure_oracle(s):
    assert list(s.gaps) == gaps_of(list(s.generators))


@given(semigroups())
def test_canonical_form_invariants(s):
    import math
    from functools import reduce

    assert reduce(math.gcd, s.generators) == 1
    members = [n for n in range(1, s.frobenius + 2 * s.generators[-1]) if n in s]
    for a in s.generators:
        assert not any(a - m in s for m in members if 0 < m < a)
    assert len(s.gaps) == s.genus
    if s.genus:
        assert max(s.gaps) == s.frobenius
    for n in range(0, s.frobenius + 2):
        if n in s:
            assert all(n + a in s for a in s.generators)


@given(semigroups())
def test_round_trips(s):
    assert from_gaps(s.gaps) == s
    assert from_gaps(s.gaps).generators == s.generators
    assert from_generators(s.generators).gaps == s.gaps


@given(semigroups())
def test_symmetric_duality(s):
    if is_symmetric(s):
        f = s.frobenius
        assert all((n in s) ^ (f - n in s) for n in range(f + 1))


@given(semigroups())
def test_lambda_and_weight_bounds(s):
    end = end_lambda(s)
    assert 1 <= end.lam <= s.genus
    assert s.frobenius in end.endo_gaps
    assert set(end.endo_gaps) <= set(s.gaps)
    assert 0 <= effective_weight(s) <= weight(s)


@given(semigroups(), st.integers(0, 50))
def test_large_degrees_are_endo(s, k):
    assert is_endo_degree(s, s.frobenius + k)


@given(semigroups())
def test_positive_nongaps_are_endo(s):
    for n in s.nongaps:
        assert is_endo_degree(s, n)
    assert is_endo_degree(s, s.frobenius - s.multiplicity + 1)


@given(semigroups(), st.integers(-60, 60))
def test_is_endo_degree_against_direct_definition(s, z):
    # check every positive nongap up to far beyond F
    direct = all(z + n in s for n in range(1, s.frobenius + abs(z) + 3) if n in s)
    assert is_endo_degree(s, z) == direct
