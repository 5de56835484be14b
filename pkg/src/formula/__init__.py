"""Formula - AST, parser, printer, rewriting, translations, synthesis and generation"""
from .ast import (
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
    X,
    is_boolean_formula,
    is_core,
    is_post_formula,
)
from .parser import FormulaParser, VariableRegistry, parse, parse_many
from .printer import Style, render
from .rewrite import (
    arrow_expansion,
    desugar,
    printed_join_term,
    dpar_post_term,
    join_post_term,
    require_post,
    resugar,
    substitute,
    to_post,
    to_rm,
)
from .synthesis import synthesize, synthesize_values
from .generation import enumerate_formulas, random_formula, representatives
from .serialization import from_json, to_json

__all__ = [
    "HALF",
    "ONE",
    "ZERO",
    "Arrow",
    "Const0",
    "Const1",
    "ConstHalf",
    "Delta",
    "Dpar",
    "Flip",
    "Formula",
    "Join",
    "Meet",
    "Nabla",
    "Neg",
    "Var",
    "Vee",
    "X",
    "is_boolean_formula",
    "is_core",
    "is_post_formula",
    "FormulaParser",
    "VariableRegistry",
    "parse",
    "parse_many",
    "Style",
    "render",
    "arrow_expansion",
    "desugar",
    "printed_join_term",
    "dpar_post_term",
    "join_post_term",
    "require_post",
    "resugar",
    "substitute",
    "to_post",
    "to_rm",
    "synthesize",
    "synthesize_values",
    "enumerate_formulas",
    "random_formula",
    "representatives",
    "from_json",
    "to_json",
]
