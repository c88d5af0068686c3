"""Numerical semigroups, graded T1 of monomial curves and moduli-dimension bounds."""

from .bounds import BoundsReport, bounds_report, equality_census, scan_lemma
from .cotangent import GradedT1, is_negatively_graded, t1_dimension, t1_graded, t1_proof_identity_check
from .enumeration import enumerate_by_genus, filter_non_negatively_graded
from .families import (
    family_expected_invariants,
    family_initial_forms,
    family_semigroup,
    verify_parametrization,
    verify_syzygies,
)
from .presentation import betti_elements, factorizations, minimal_presentation, validate_presentation
from .semigroup import (
    NumericalSemigroup,
    apery_set,
    effective_weight,
    end_lambda,
    from_gaps,
    from_generators,
    is_endo_degree,
    is_symmetric,
)

__all__ = [
    "BoundsReport", "GradedT1", "NumericalSemigroup", "apery_set", "betti_elements",
    "bounds_report", "effective_weight", "end_lambda", "enumerate_by_genus", "equality_census",
    "factorizations", "family_expected_invariants", "family_initial_forms", "family_semigroup",
    "filter_non_negatively_graded", "from_gaps", "from_generators", "is_endo_degree",
    "is_negatively_graded", "is_symmetric", "minimal_presentation", "scan_lemma",
    "t1_dimension", "t1_graded", "t1_proof_identity_check", "validate_presentation",
    "verify_parametrization", "verify_syzygies",
]
