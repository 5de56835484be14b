"""Semantics - valuations, truth tables, consequence and its reductions"""
from .valuation import Valuation
from .truth_table import TruthTable, meet_table_fold
from .evaluator import equivalent, evaluate, is_tautology, post_table, required_arity, table
from .consequence import (
    Clash,
    Compatibility,
    Mode,
    Theory,
    Verdict,
    compactness_core,
    compatibility,
    entails,
    entails_via_meet,
    meet_formula,
    meet_term,
    nonmonotonicity_witness,
)
from .reductions import (
    arrow_formula,
    entails_via_reduction,
    equivalent_via_reduction,
    flip_reduction_input,
    post_tautology,
    reduce_post_to_rm,
)

__all__ = [
    "Valuation",
    "TruthTable",
    "meet_table_fold",
    "equivalent",
    "evaluate",
    "is_tautology",
    "post_table",
    "required_arity",
    "table",
    "Clash",
    "Compatibility",
    "Mode",
    "Theory",
    "Verdict",
    "compactness_core",
    "compatibility",
    "entails",
    "entails_via_meet",
    "meet_formula",
    "meet_term",
    "nonmonotonicity_witness",
    "arrow_formula",
    "entails_via_reduction",
    "equivalent_via_reduction",
    "flip_reduction_input",
    "post_tautology",
    "reduce_post_to_rm",
]
