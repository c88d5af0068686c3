import random

import pytest
from hypothesis import given

from numsemi.cotangent import (
    degree_cell,
    is_negatively_graded,
    scan_window,
    t1_dimension,
    t1_graded,
    t1_proof_identity_check,
)
from numsemi.errors import GenusZero, NegativeDimension
from numsemi.intlinalg import rank
from numsemi.presentation import BinomialRelation, Factorization, Presentation, minimal_presentation
from numsemi.semigroup import effective_weight, end_lambda, from_gaps, from_generators, is_endo_degree

from .conftest import semigroups


def test_cusp():
    # y^2 = x^3 + a x + b: perturbations of weight 2 and 0 against an equation of weight 6
    assert t1_graded(from_generators([2, 3])).by_degree == {-6: 1, -4: 1}


def test_two_five():
    # y^2 = x^5 + a_3 x^3 + ... + a_0: degrees 2k - 10, k = 0..3
    assert t1_graded(from_generators([2, 5])).by_degree == {-10: 1, -8: 1, -6: 1, -4: 1}


def test_cusp_pointwise():
    s = from_generators([2, 3])
    p = minimal_presentation(s)
    got = {l: t1_dimension(s, p, l) for l in range(-20, 10)}
    assert {l for l, d in got.items() if d} == {-4, -6}


@given(semigroups())
def test_frobenius_degree_vanishes(s):
    assert t1_dimension(s, minimal_presentation(s), s.frobenius) == 0


@pytest.mark.parametrize(
    "s, plus, minus",
    [
        (from_gaps([1, 2, 3, 5, 7, 9]), 2, None),
        (from_generators([6, 9, 10, 13, 14]), 2, 19),
        (from_generators([6, 7, 8]), 3, None),
        (from_gaps([1, 2, 4, 5, 8]), 1, None),
    ],
)
def test_t1_examples(s, plus, minus):
    t = t1_graded(s)
    assert t.t1_plus == plus
    if minus is not None:
        assert t.t1_minus == minus


def test_negatively_graded_examples():
    assert is_negatively_graded(from_generators([2, 3]))
    assert not is_negatively_graded(from_gaps([1, 2, 4, 5, 8]))
    assert is_negatively_graded(from_generators([6, 8, 9, 10, 11]))


def test_genus_zero_rejected():
    with pytest.raises(GenusZero):
        t1_graded(from_generators([1]))


def test_negative_dimension_is_diagnosed():
    s = from_generators([2, 3])
    # recorded weight 2 makes the relation active at degree -1, where |A| = 1
    fake = Presentation((2, 3), (BinomialRelation(Factorization((3, -2), 2), Factorization((0, 0), 2)),))
    with pytest.raises(NegativeDimension) as err:
        t1_dimension(s, fake, -1)
    assert (err.value.a_count, err.value.v_dim) == (1, 1)


def test_json_shape():
    doc = t1_graded(from_generators([2, 3])).to_json()
    assert doc == {"by_degree": {"-6": 1, "-4": 1}, "t1_plus": 0, "t1_minus": 2}


def test_proof_identity_examples():
    for gens in ([6, 7, 8], [2, 3]):
        chk = t1_proof_identity_check(from_generators(gens))
        assert chk.ok
    assert t1_proof_identity_check(from_generators([6, 7, 8])).rhs == 3
    assert t1_proof_identity_check(from_generators([2, 3])).rhs == 0


def test_proof_identity_genus7(genus7):
    for s in genus7:
        assert t1_proof_identity_check(s).ok, s


def test_window_soundness(genus7):
    for s in genus7:
        p = minimal_presentation(s)
        w = scan_window(s, p)
        ar = s.generators[-1]
        wide = range(w.start - ar, w.stop + ar)
        assert t1_graded(s, p, wide).by_degree == t1_graded(s, p).by_degree, s


def test_support_inside_window(genus7):
    for s in genus7:
        p = minimal_presentation(s)
        t = t1_graded(s, p)
        assert all(-max(p.betti_degrees) <= l <= s.frobenius - s.multiplicity for l in t.by_degree)
        assert all(d >= 1 for d in t.by_degree.values())


def test_cells_nonnegative_and_presentation_independent(genus7):
    for s in genus7:
        p1 = minimal_presentation(s, "lexmax")
        p2 = minimal_presentation(s, "lexmin")
        for l in scan_window(s, p1):
            c1, c2 = degree_cell(s, p1, l), degree_cell(s, p2, l)
            assert c1.v_dim == c2.v_dim
            if not is_endo_degree(s, l):
                assert c1.value >= 0


@given(semigroups(max_gen=14, max_len=4))
def test_rank_ignores_relation_order(s):
    p = minimal_presentation(s)
    rels = list(p.relations)
    random.Random(len(rels)).shuffle(rels)
    q = Presentation(p.generators, tuple(rels))
    for l in scan_window(s, p):
        assert degree_cell(s, p, l) == degree_cell(s, q, l)


def test_negatively_graded_identity_genus8():
    from numsemi.enumeration import enumerate_by_genus

    for s in enumerate_by_genus(8):
        if s.genus and is_negatively_graded(s):
            assert 3 * s.genus - 2 - effective_weight(s) == 2 * s.genus - 2 + end_lambda(s).lam, s


def test_vectors_rank_is_full_below_window(genus7):
    for s in genus7:
        p = minimal_presentation(s)
        assert rank([r.lattice_vector for r in p.relations]) == len(s.generators) - 1
