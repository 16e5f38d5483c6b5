"""Numerical semigroups, relative ideals, type sequences and their invariants."""

from .census import (
    CensusQuery,
    CensusReport,
    SearchReport,
    Violation,
    classification_census,
    enumerate_ideals,
    enumerate_semigroups,
    search_negative_a,
    verify_theorems,
)
from .classification import (
    ClassificationOutcome,
    RingClassification,
    WindowProfile,
    b_of_tail,
    case_j_semigroups,
    classify_b,
    quotient_length,
    ring_classification,
    window_profile,
)
from .errors import (
    BoundTooLarge,
    ConductorNotTight,
    DegenerateDVR,
    EmptyGenerators,
    EncodingError,
    NotClosed,
    NotContained,
    NotCoprime,
    NotIntegralProper,
    NotOversemigroup,
    ParentMismatch,
    TypeseqError,
    WindowTooLarge,
)
from .ideals import (
    RelativeIdeal,
    bidual,
    canonical_ideal,
    colon,
    dedekind_different,
    dual,
    gamma_of_ideal,
    ideal_from_generators,
    ideal_intersection,
    ideal_product,
    ideal_union,
    integral_closure,
    is_integrally_closed,
    is_omega_stable,
    is_principal,
    is_reflexive,
    length_between,
    maximal_ideal,
    principal_ideal,
    tail_ideal,
    unit_ideal,
)
from .invariants import (
    Check,
    IdealInvariantReport,
    OverringReport,
    TypeSequence,
    ab_invariants,
    d_invariant,
    decomposition_check,
    extended_type_sequence,
    gamma_invariants,
    overring_check,
    sigma,
    type_sequence,
    v_complement,
)
from .semigroup import (
    NumericalSemigroup,
    SemigroupInvariants,
    SemigroupPredicates,
    basic_invariants,
    from_generators,
    from_small_elements,
    is_arf,
    oversemigroups,
    predicates,
)

__version__ = "0.1.0"

__all__ = [
    "BoundTooLarge",
    "CensusQuery",
    "CensusReport",
    "Check",
    "ClassificationOutcome",
    "ConductorNotTight",
    "DegenerateDVR",
    "EmptyGenerators",
    "EncodingError",
    "IdealInvariantReport",
    "NotClosed",
    "NotContained",
    "NotCoprime",
    "NotIntegralProper",
    "NotOversemigroup",
    "NumericalSemigroup",
    "OverringReport",
    "ParentMismatch",
    "RelativeIdeal",
    "RingClassification",
    "SearchReport",
    "WindowProfile",
    "SemigroupInvariants",
    "SemigroupPredicates",
    "TypeSequence",
    "TypeseqError",
    "Violation",
    "WindowTooLarge",
    "ab_invariants",
    "b_of_tail",
    "basic_invariants",
    "bidual",
    "canonical_ideal",
    "case_j_semigroups",
    "classification_census",
    "classify_b",
    "colon",
    "d_invariant",
    "decomposition_check",
    "dedekind_different",
    "dual",
    "enumerate_ideals",
    "enumerate_semigroups",
    "extended_type_sequence",
    "from_generators",
    "from_small_elements",
    "gamma_invariants",
    "gamma_of_ideal",
    "ideal_from_generators",
    "ideal_intersection",
    "ideal_product",
    "ideal_union",
    "integral_closure",
    "is_arf",
    "is_integrally_closed",
    "is_omega_stable",
    "is_principal",
    "is_reflexive",
    "length_between",
    "maximal_ideal",
    "overring_check",
    "oversemigroups",
    "predicates",
    "principal_ideal",
    "quotient_length",
    "ring_classification",
    "search_negative_a",
    "window_profile",
    "sigma",
    "tail_ideal",
    "type_sequence",
    "unit_ideal",
    "v_complement",
    "verify_theorems",
    "__version__",
]
