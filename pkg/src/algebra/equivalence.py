"""Term equivalence - Post algebras from RM-algebras and back"""
import logging
from typing import Dict

from src.algebra.axioms import AxiomSet, check_axioms, post_axioms, rm_axioms
from src.algebra.finite_algebra import POST_SIGNATURE, RM_SIGNATURE, FiniteAlgebra, Signature
from src.algebra.terms import term_operation
from src.exceptions import AxiomFailureError
from src.formula.ast import HALF, ONE, ZERO, Formula, Meet, Nabla, Neg, Vee, X
from src.formula.rewrite import dpar_post_term, join_post_term, to_rm

logger = logging.getLogger(__name__)

# Defining terms in the source signature for each target operation
POST_FROM_RM: Dict[str, Formula] = {
    "zero": ZERO,
    "half": HALF,
    "one": to_rm(ONE),
    "neg": to_rm(Neg(X(1))),
    "nabla": to_rm(Nabla(X(1))),
    "vee": to_rm(Vee(X(1), X(2))),
    "meet": Meet(X(1), X(2)),
}


def _rm_from_post() -> Dict[str, Formula]:
    return {
        "zero": ZERO,
        "half": HALF,
        "join": join_post_term(),
        "dpar": dpar_post_term(),
        "meet": Meet(X(1), X(2)),
    }


def _require_axioms(algebra: FiniteAlgebra, axioms: AxiomSet) -> None:
    report = check_axioms(algebra, axioms)
    if not report.passed:
        raise AxiomFailureError(
            f"{algebra.name or 'Input algebra'} is not a model of {axioms.name}: "
            f"{report.failure.describe(algebra)}",
            report.failure,
        )


def _derive(
    algebra: FiniteAlgebra, signature: Signature, terms: Dict[str, Formula], name: str
) -> FiniteAlgebra:
    constants = {c: int(term_operation(terms[c], algebra, 0)) for c in signature.constants}
    unary = {op: term_operation(terms[op], algebra, 1) for op in signature.unary}
    binary = {op: term_operation(terms[op], algebra, 2) for op in signature.binary}
    return FiniteAlgebra(algebra.size, constants, unary, binary, algebra.labels, name)


def derive_post(algebra: FiniteAlgebra) -> FiniteAlgebra:
    """
    The Post algebra term-defined on an RM-algebra

    1 = d(h,0), !x = d(h,x), N x = d(x,0), x | y = !(!x & !y); 0, h and & are kept.

    Raises:
        AxiomFailureError: If the input fails the RM equations
    """
    _require_axioms(algebra, rm_axioms())
    derived = _derive(algebra, POST_SIGNATURE, POST_FROM_RM, f"post({algebra.name})")
    logger.info(f"Derived Post algebra on {algebra.size} elements from {algebra.name}")
    return derived


def derive_rm(algebra: FiniteAlgebra) -> FiniteAlgebra:
    """
    The RM-algebra term-defined on a Post algebra

    # by the synthesized Post term for the join table, d by its Post term.

    Raises:
        AxiomFailureError: If the input fails the Post axioms
    """
    _require_axioms(algebra, post_axioms())
    derived = _derive(algebra, RM_SIGNATURE, _rm_from_post(), f"rm({algebra.name})")
    logger.info(f"Derived RM-algebra on {algebra.size} elements from {algebra.name}")
    return derived


def round_trip_rm(algebra: FiniteAlgebra) -> bool:
    """RM -> Post -> RM reproduces the RM tables"""
    return derive_rm(derive_post(algebra)).same_tables(algebra.restricted(RM_SIGNATURE))


def round_trip_post(algebra: FiniteAlgebra) -> bool:
    """Post -> RM -> Post reproduces the Post tables"""
    return derive_post(derive_rm(algebra)).same_tables(algebra.restricted(POST_SIGNATURE))
