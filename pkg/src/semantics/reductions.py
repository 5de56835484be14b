"""Reductions - consequence to tautology, and Post tautology to RM tautology"""
from typing import Optional

from src.formula.ast import ZERO, Arrow, Dpar, Formula, Join, Meet
from src.formula.rewrite import to_rm
from src.semantics.evaluator import is_tautology, post_table, required_arity
from src.trits import Trit


def arrow_formula(alpha: Formula, beta: Formula) -> Formula:
    """alpha ~> beta; a tautology exactly when {alpha} entails beta"""
    return Arrow(alpha, beta)


def entails_via_reduction(alpha: Formula, beta: Formula, m: Optional[int] = None) -> bool:
    """Decide {alpha} entails beta as a tautology check of alpha ~> beta"""
    m = required_arity(alpha, beta) if m is None else m
    return is_tautology(arrow_formula(alpha, beta), m)


def equivalent_via_reduction(alpha: Formula, beta: Formula, m: Optional[int] = None) -> bool:
    """Decide equal tables as a tautology check of (alpha ~> beta) & (beta ~> alpha)"""
    m = required_arity(alpha, beta) if m is None else m
    return is_tautology(Meet(arrow_formula(alpha, beta), arrow_formula(beta, alpha)), m)


def flip_reduction_input(post_formula: Formula) -> Formula:
    """The RM translation of a Post formula, fed to the flip reduction"""
    return to_rm(post_formula)


def reduce_post_to_rm(post_formula: Formula) -> Formula:
    """
    RM formula that is a tautology exactly when the Post formula is constantly 1

    Returns d(b',0) # d(d(0,b'),0), i.e. flip applied to the RM translation b'.
    """
    translated = flip_reduction_input(post_formula)
    return Join(Dpar(translated, ZERO), Dpar(Dpar(ZERO, translated), ZERO))


def post_tautology(post_formula: Formula, m: Optional[int] = None) -> bool:
    """Every entry of the Post table is 1"""
    return post_table(post_formula, m).is_constant(Trit.ONE)
