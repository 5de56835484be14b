"""Evaluator - pointwise evaluation and whole-table tabulation of formulas"""
import logging
from functools import lru_cache
from typing import Dict, Optional

from src.exceptions import ArityError
from src.formula.ast import (
    Arrow,
    Const0,
    Const1,
    ConstHalf,
    Delta,
    Dpar,
    Flip,
    Formula,
    Join,
    Meet,
    Nabla,
    Neg,
    Unary,
    Var,
    Vee,
)
from src.formula.rewrite import require_post
from src.semantics.truth_table import TruthTable
from src.semantics.valuation import Valuation
from src.trits import Trit, TritOps

logger = logging.getLogger(__name__)


def required_arity(*formulas: Formula) -> int:
    """Largest variable index among the formulas (0 when all are closed)"""
    return max((formula.max_index() for formula in formulas), default=0)


def _check_arity(formula: Formula, m: int) -> None:
    needed = formula.max_index()
    if needed > m:
        raise ArityError(f"Formula uses X{needed} but arity is {m}")


_UNARY_TRIT = {
    Neg: TritOps.neg,
    Nabla: TritOps.nabla,
    Delta: TritOps.delta,
    Flip: TritOps.flip,
}
_BINARY_TRIT = {
    Join: TritOps.join,
    Dpar: TritOps.dpar,
    Meet: TritOps.meet,
    Vee: TritOps.vee,
}
_CONSTANT_TRIT = {Const0: Trit.ZERO, ConstHalf: Trit.HALF, Const1: Trit.ONE}


def _arrow_trit(alpha: Trit, beta: Trit) -> Trit:
    first = TritOps.join(beta, TritOps.nabla(TritOps.neg(alpha)))
    second = TritOps.join(beta, TritOps.neg(TritOps.nabla(alpha)))
    chain = TritOps.meet(TritOps.meet(first, second), TritOps.neg(first))
    return TritOps.meet(chain, TritOps.neg(second))


def evaluate(formula: Formula, valuation: Valuation) -> Trit:
    """
    Value of a formula at one valuation

    Args:
        formula: Formula (sugar allowed)
        valuation: Valuation covering every variable of the formula

    Raises:
        ArityError: If a variable index exceeds the valuation's arity
    """
    _check_arity(formula, valuation.m)
    values: Dict[int, Trit] = {}
    for node in formula.post_order():
        kind = type(node)
        if kind in _CONSTANT_TRIT:
            value = _CONSTANT_TRIT[kind]
        elif isinstance(node, Var):
            value = valuation[node.index]
        elif kind in _UNARY_TRIT:
            value = _UNARY_TRIT[kind](values[id(node.operand)])
        elif kind in _BINARY_TRIT:
            value = _BINARY_TRIT[kind](values[id(node.left)], values[id(node.right)])
        elif isinstance(node, Arrow):
            value = _arrow_trit(values[id(node.left)], values[id(node.right)])
        else:
            raise TypeError(f"Not a formula node: {node!r}")
        values[id(node)] = value
    return values[id(formula)]


@lru_cache(maxsize=32)
def _coordinates(m: int, index: int) -> TruthTable:
    return TruthTable.coordinate(m, index)


@lru_cache(maxsize=32)
def _constant(m: int, value: Trit) -> TruthTable:
    return TruthTable.constant(m, value)


def _arrow_table(alpha: TruthTable, beta: TruthTable) -> TruthTable:
    first = beta.join(alpha.neg().nabla())
    second = beta.join(alpha.nabla().neg())
    return first.meet(second).meet(first.neg()).meet(second.neg())


def table(formula: Formula, m: Optional[int] = None) -> TruthTable:
    """
    Truth table of a formula over X1..Xm

    Args:
        formula: Formula (sugar allowed)
        m: Arity; defaults to the largest variable index of the formula

    Returns:
        The table, entry i being the value at valuation i

    Raises:
        ArityError: If a variable index exceeds m
    """
    m = formula.max_index() if m is None else m
    _check_arity(formula, m)
    tables: Dict[int, TruthTable] = {}
    for node in formula.post_order():
        kind = type(node)
        if kind in _CONSTANT_TRIT:
            result = _constant(m, _CONSTANT_TRIT[kind])
        elif isinstance(node, Var):
            result = _coordinates(m, node.index)
        elif isinstance(node, Arrow):
            result = _arrow_table(tables[id(node.left)], tables[id(node.right)])
        elif isinstance(node, Unary):
            operand = tables[id(node.operand)]
            result = {
                Neg: operand.neg,
                Nabla: operand.nabla,
                Delta: operand.delta,
                Flip: operand.flip,
            }[kind]()
        else:
            left, right = tables[id(node.left)], tables[id(node.right)]
            result = {
                Join: left.join,
                Dpar: left.dpar,
                Meet: left.meet,
                Vee: left.vee,
            }[kind](right)
        tables[id(node)] = result
    return tables[id(formula)]


def post_table(post_formula: Formula, m: Optional[int] = None) -> TruthTable:
    """
    Truth table of a Post formula using the Post operations 1-x, min(1,2x), max and min

    Raises:
        SignatureError: If the formula leaves the Post signature
    """
    require_post(post_formula)
    return table(post_formula, m)


def equivalent(first: Formula, second: Formula, m: Optional[int] = None) -> bool:
    """Equal truth tables at arity m (default: the largest index used by either)"""
    m = required_arity(first, second) if m is None else m
    return table(first, m) == table(second, m)


def is_tautology(formula: Formula, m: Optional[int] = None) -> bool:
    """
    Constantly h over all valuations

    The default arity is the largest variable index; closed formulas are
    evaluated once. The verdict does not depend on extra variables.
    """
    return table(formula, m).is_constant(Trit.HALF)
