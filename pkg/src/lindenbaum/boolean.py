"""Boolean side - two-valued models, Lindenbaum algebras and normal forms"""
import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from src.algebra.catalogue import powerset_algebra, trivial
from src.algebra.finite_algebra import BOOLEAN_SIGNATURE, FiniteAlgebra
from src.exceptions import ArityError, SignatureError
from src.formula.ast import ONE, Formula, Neg, X, is_boolean_formula, meet_all, vee_all
from src.formula.printer import render
from src.semantics.evaluator import evaluate
from src.semantics.valuation import Valuation
from src.trits import Trit

logger = logging.getLogger(__name__)

BoolPoint = Tuple[int, ...]


@dataclass(frozen=True)
class BoolTheory:
    """Premises over 0, 1, !, |, &"""

    formulas: Tuple[Formula, ...] = ()

    def __post_init__(self):
        for formula in self.formulas:
            if not is_boolean_formula(formula):
                raise SignatureError(f"Not a boolean formula: {render(formula)}")

    @classmethod
    def of(cls, formulas: Iterable[Formula]) -> "BoolTheory":
        return cls(tuple(dict.fromkeys(formulas)))

    def arity(self) -> int:
        return max((f.max_index() for f in self.formulas), default=0)


def boolean_points(m: int) -> List[BoolPoint]:
    """The 2^m two-valued valuations in lexicographic order"""
    return list(itertools.product((0, 1), repeat=m))


def bool_value(formula: Formula, point: BoolPoint) -> int:
    valuation = Valuation.from_digits([Trit.ONE if bit else Trit.ZERO for bit in point])
    value = evaluate(formula, valuation)
    if value is Trit.HALF:
        raise SignatureError(f"{render(formula)} takes the value h on a boolean valuation")
    return 1 if value is Trit.ONE else 0


def bool_mod(theory: BoolTheory, m: Optional[int] = None) -> List[BoolPoint]:
    """Two-valued valuations satisfying every premise"""
    m = theory.arity() if m is None else m
    if theory.arity() > m:
        raise ArityError(f"Theory uses X{theory.arity()} but arity is {m}")
    return [p for p in boolean_points(m) if all(bool_value(f, p) for f in theory.formulas)]


def bool_lind(theory: BoolTheory, m: Optional[int] = None) -> FiniteAlgebra:
    """All functions Mod(T) -> {0, 1} under the pointwise boolean operations"""
    n = len(bool_mod(theory, m))
    if n == 0:
        return trivial(BOOLEAN_SIGNATURE)
    algebra = powerset_algebra(n)
    logger.debug(f"Boolean Lindenbaum algebra with {n} models has {algebra.size} elements")
    return algebra


def bool_synthesize(points: Sequence[BoolPoint], m: int) -> Formula:
    """
    Disjunctive normal form true exactly on the given valuations

    An empty set gives 0; with m = 0 the single valuation gives 1.
    """
    disjuncts = []
    for point in sorted(set(points)):
        if len(point) != m:
            raise ArityError(f"Valuation {point} does not have arity {m}")
        literals = [X(i) if bit else Neg(X(i)) for i, bit in enumerate(point, start=1)]
        disjuncts.append(meet_all(literals) if literals else ONE)
    return vee_all(disjuncts)
