"""Algebra - finite algebras, axiom checking, term equivalence, clones and isomorphism"""
from .finite_algebra import (
    BOOLEAN_SIGNATURE,
    POST_SIGNATURE,
    RM_SIGNATURE,
    FiniteAlgebra,
    Signature,
)
from .catalogue import (
    boolean_elements,
    boolean_two,
    faces_algebra,
    load_algebra,
    power,
    powerset_algebra,
    product,
    trivial,
    zeta_post,
    zeta_rm,
)
from .terms import evaluate_term, required_operations, term_operation
from .axioms import (
    AxiomFailure,
    AxiomLoader,
    AxiomReport,
    AxiomSet,
    Equation,
    axiom_set_named,
    check_axioms,
    kleene_axioms,
    post_axioms,
    rm_axioms,
)
from .equivalence import derive_post, derive_rm, round_trip_post, round_trip_rm
from .clone import Clone, clone_closure, refute_case_shapes
from .isomorphism import generating_set, iso_check, is_isomorphism
from .free import FreeRMAlgebra, free_rm
from .identities import IDENTITIES, IdentityResult, equation_report, equation_suite, mismatch_grid

__all__ = [
    "BOOLEAN_SIGNATURE",
    "POST_SIGNATURE",
    "RM_SIGNATURE",
    "FiniteAlgebra",
    "Signature",
    "boolean_elements",
    "boolean_two",
    "faces_algebra",
    "load_algebra",
    "power",
    "powerset_algebra",
    "product",
    "trivial",
    "zeta_post",
    "zeta_rm",
    "evaluate_term",
    "required_operations",
    "term_operation",
    "AxiomFailure",
    "AxiomLoader",
    "AxiomReport",
    "AxiomSet",
    "Equation",
    "axiom_set_named",
    "check_axioms",
    "kleene_axioms",
    "post_axioms",
    "rm_axioms",
    "derive_post",
    "derive_rm",
    "round_trip_post",
    "round_trip_rm",
    "Clone",
    "clone_closure",
    "refute_case_shapes",
    "generating_set",
    "iso_check",
    "is_isomorphism",
    "FreeRMAlgebra",
    "free_rm",
    "IDENTITIES",
    "IdentityResult",
    "equation_report",
    "equation_suite",
    "mismatch_grid",
]
