"""Formula rewriting - desugaring, resugaring, substitution and the RM/Post translations"""
import logging
from functools import lru_cache
from typing import Callable, Dict, Mapping

from src.exceptions import SignatureError
from src.formula.ast import (
    HALF,
    ONE,
    ZERO,
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
    Var,
    Vee,
    POST_KINDS,
    X,
    is_post_formula,
    vee_all,
)
from src.formula.synthesis import synthesize_values
from src.trits.operations import JOIN_TABLE

logger = logging.getLogger(__name__)


def _bottom_up(formula: Formula, step: Callable[[Formula, tuple], Formula]) -> Formula:
    """Rebuild a formula children-first; each shared node is rewritten once"""
    done: Dict[int, Formula] = {}
    for node in formula.post_order():
        children = tuple(done[id(child)] for child in node.children())
        done[id(node)] = step(node, children)
    return done[id(formula)]


def _same_children(node: Formula, children: tuple) -> bool:
    return all(a is b for a, b in zip(node.children(), children))


def _keep(node: Formula, children: tuple) -> Formula:
    return node if _same_children(node, children) else node.rebuild(children)


# Desugaring
def _neg(a: Formula) -> Formula:
    return Dpar(HALF, a)


def _nabla(a: Formula) -> Formula:
    return Dpar(a, ZERO)


def arrow_conjuncts(alpha: Formula, beta: Formula):
    """The two faces A = beta # N !alpha and B = beta # !N alpha of alpha ~> beta (sugared)"""
    first = Join(beta, Nabla(Neg(alpha)))
    second = Join(beta, Neg(Nabla(alpha)))
    return first, second


def arrow_expansion(alpha: Formula, beta: Formula) -> Formula:
    """alpha ~> beta as the meet chain A & B & !A & !B (sugared)"""
    first, second = arrow_conjuncts(alpha, beta)
    return Meet(Meet(Meet(first, second), Neg(first)), Neg(second))


def _desugar_step(node: Formula, children: tuple) -> Formula:
    if isinstance(node, Const1):
        return Dpar(HALF, ZERO)
    if isinstance(node, Neg):
        return _neg(children[0])
    if isinstance(node, Nabla):
        return _nabla(children[0])
    if isinstance(node, Delta):
        return _neg(_nabla(_neg(children[0])))
    if isinstance(node, Vee):
        return _neg(Meet(_neg(children[0]), _neg(children[1])))
    if isinstance(node, Flip):
        a = children[0]
        return Join(_nabla(a), _nabla(Dpar(ZERO, a)))
    if isinstance(node, Arrow):
        alpha, beta = children
        first = Join(beta, _nabla(_neg(alpha)))
        second = Join(beta, _neg(_nabla(alpha)))
        return Meet(Meet(Meet(first, second), _neg(first)), _neg(second))
    return _keep(node, children)


def desugar(formula: Formula) -> Formula:
    """
    Expand every derived connective into 0, h, variables, #, d and &

    Returns:
        An equivalent formula over the core connectives only
    """
    return _bottom_up(formula, _desugar_step)


# Resugaring
def _resugar_node(node: Formula) -> Formula:
    """One pattern rewrite at the root, or the node itself"""
    if isinstance(node, Dpar):
        if isinstance(node.left, ConstHalf) and isinstance(node.right, Const0):
            return ONE
        if isinstance(node.left, ConstHalf):
            return Neg(node.right)
        if isinstance(node.right, Const0):
            return Nabla(node.left)
    if isinstance(node, Neg):
        inner = node.operand
        if isinstance(inner, Meet) and isinstance(inner.left, Neg) and isinstance(inner.right, Neg):
            return Vee(inner.left.operand, inner.right.operand)
        if isinstance(inner, Nabla) and isinstance(inner.operand, Neg):
            return Delta(inner.operand.operand)
    if isinstance(node, Join) and isinstance(node.left, Nabla) and isinstance(node.right, Nabla):
        a, b = node.left.operand, node.right.operand
        if isinstance(b, Dpar) and isinstance(b.left, Const0) and b.right == a:
            return Flip(a)
    return node


def _resugar_step(node: Formula, children: tuple) -> Formula:
    current = _keep(node, children)
    while True:
        rewritten = _resugar_node(current)
        if rewritten is current:
            return current
        current = rewritten


def resugar(formula: Formula) -> Formula:
    """Restore derived connectives from their core expansions where the patterns are recognized"""
    return _bottom_up(formula, _resugar_step)


def substitute(formula: Formula, mapping: Mapping[int, Formula]) -> Formula:
    """
    Replace variables by formulas, keyed by variable index

    Every occurrence of a variable receives the same replacement object,
    so the result shares subterms instead of copying them.
    """

    def step(node: Formula, children: tuple) -> Formula:
        if isinstance(node, Var) and node.index in mapping:
            return mapping[node.index]
        return _keep(node, children)

    return _bottom_up(formula, step)


# Signature translations
def require_post(formula: Formula) -> Formula:
    """
    Raises:
        SignatureError: If the formula uses connectives outside 0, h, 1, !, N, |, &
    """
    if not is_post_formula(formula):
        extra = sorted(kind.__name__ for kind in formula.kinds() - POST_KINDS)
        raise SignatureError(f"Not a Post formula: uses {', '.join(extra)}")
    return formula


def to_rm(post_formula: Formula) -> Formula:
    """
    Translate a Post formula into the RM core

    1 -> d(h,0), !a -> d(h,a), N a -> d(a,0), a | b -> !(!a & !b); & and the
    atoms pass through.
    """
    require_post(post_formula)
    return desugar(post_formula)


def _post_delta(a: Formula) -> Formula:
    return Neg(Nabla(Neg(a)))


@lru_cache(maxsize=1)
def dpar_post_term() -> Formula:
    """Post term for d(X1, X2): (h & N X2 & N !X2) | (T X1 & T X2) | (N X1 & T !X2)"""
    x, y = X(1), X(2)
    return vee_all(
        [
            Meet(Meet(HALF, Nabla(y)), Nabla(Neg(y))),
            Meet(_post_delta(x), _post_delta(y)),
            Meet(Nabla(x), Neg(Nabla(y))),
        ]
    )


@lru_cache(maxsize=1)
def printed_join_term() -> Formula:
    """The printed Post term offered for X1 # X2: (!N X2 & N X2 & h) | (T X2 & (h | T X1)) | d(0,X2)"""
    x, y = X(1), X(2)
    return vee_all(
        [
            Meet(Meet(Neg(Nabla(y)), Nabla(y)), HALF),
            Meet(Delta(y), Vee(HALF, Delta(x))),
            Dpar(ZERO, y),
        ]
    )


@lru_cache(maxsize=1)
def join_post_term() -> Formula:
    """Post term for X1 # X2, synthesized from the join table"""
    values = [cell for row in JOIN_TABLE for cell in row]
    term = synthesize_values(values, 2, signature="post")
    logger.debug(f"Synthesized Post join term of size {term.size}")
    return term


def _post_dpar(a: Formula, b: Formula, original: Dpar) -> Formula:
    if isinstance(original.left, ConstHalf) and isinstance(original.right, Const0):
        return ONE
    if isinstance(original.left, ConstHalf):
        return Neg(b)
    if isinstance(original.right, Const0):
        return Nabla(a)
    return substitute(dpar_post_term(), {1: a, 2: b})


def _to_post_step(node: Formula, children: tuple) -> Formula:
    if isinstance(node, Join):
        return substitute(join_post_term(), {1: children[0], 2: children[1]})
    if isinstance(node, Dpar):
        return _post_dpar(children[0], children[1], node)
    return _keep(node, children)


def to_post(formula: Formula) -> Formula:
    """
    Translate any formula into the Post signature

    d(a,0) -> N a, d(h,a) -> !a and d(h,0) -> 1 directly; any other d(a,b)
    through its Post term, # through the synthesized join term.
    """
    return _bottom_up(desugar(formula), _to_post_step)
