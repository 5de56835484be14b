"""Formula synthesis - a formula for any truth table, as a disjunction of value indicators"""
import itertools
from typing import List, Sequence

from src.exceptions import PreconditionError
from src.formula.ast import (
    HALF,
    Delta,
    Formula,
    Meet,
    Nabla,
    Neg,
    X,
    meet_all,
    vee_all,
)
from src.trits import TRITS, Trit

SIGNATURES = ("rm", "post")


class ValueIndicators:
    """
    {0,1}-valued indicators of the three values of a single argument

    is0(x) = T !x, is1(x) = T x, ish(x) = N x & N !x. In the Post signature
    T a is spelled !N !a, so is0 becomes !N x.
    """

    def __init__(self, signature: str = "rm"):
        if signature not in SIGNATURES:
            raise ValueError(f"Unknown synthesis signature: {signature}")
        self.signature = signature

    def is_zero(self, x: Formula) -> Formula:
        if self.signature == "post":
            return Neg(Nabla(x))
        return Delta(Neg(x))

    def is_one(self, x: Formula) -> Formula:
        if self.signature == "post":
            return Neg(Nabla(Neg(x)))
        return Delta(x)

    def is_half(self, x: Formula) -> Formula:
        return Meet(Nabla(x), Nabla(Neg(x)))

    def indicator(self, value: Trit, x: Formula) -> Formula:
        if value is Trit.ZERO:
            return self.is_zero(x)
        if value is Trit.ONE:
            return self.is_one(x)
        return self.is_half(x)


def synthesize_values(values: Sequence[Trit], m: int, signature: str = "rm") -> Formula:
    """
    Build a formula whose table over X1..Xm is the given value sequence

    Args:
        values: 3^m trits in valuation-index order (X1 most significant)
        m: Arity, at least 1
        signature: "rm" for sugared RM connectives, "post" for the Post signature

    Returns:
        The disjunction over valuations v of chi_v (value 1) or chi_v & h (value h);
        valuations with value 0 contribute nothing

    Raises:
        PreconditionError: If m < 1 or the value count is not 3^m
    """
    if m < 1:
        raise PreconditionError("Synthesis needs arity m >= 1; use a constant for closed tables")
    values = [Trit(value) for value in values]
    if len(values) != 3 ** m:
        raise PreconditionError(f"Expected {3 ** m} values for arity {m}, got {len(values)}")

    indicators = ValueIndicators(signature)
    variables = [X(i) for i in range(1, m + 1)]
    # Literal objects are shared between disjuncts
    literals = {
        (i, value): indicators.indicator(value, variables[i]) for i in range(m) for value in TRITS
    }

    disjuncts: List[Formula] = []
    for index, point in enumerate(itertools.product(TRITS, repeat=m)):
        value = values[index]
        if value is Trit.ZERO:
            continue
        chi = meet_all(literals[(i, digit)] for i, digit in enumerate(point))
        disjuncts.append(chi if value is Trit.ONE else Meet(chi, HALF))
    return vee_all(disjuncts)


def synthesize(table, signature: str = "rm") -> Formula:
    """
    Build a formula with exactly the given truth table

    Args:
        table: A TruthTable (anything exposing `m` and `trits()`)
        signature: "rm" or "post"
    """
    return synthesize_values(table.trits(), table.m, signature)
