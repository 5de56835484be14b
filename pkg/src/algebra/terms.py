"""Term evaluation in finite algebras"""
from typing import Dict, FrozenSet, Optional, Sequence

import numpy as np

from src.algebra.finite_algebra import FiniteAlgebra
from src.exceptions import ArityError, SignatureError
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
    Var,
    Vee,
)

CONSTANT_NAMES = {Const0: "zero", ConstHalf: "half", Const1: "one"}
UNARY_NAMES = {Neg: "neg", Nabla: "nabla", Delta: "delta", Flip: "flip"}
BINARY_NAMES = {Join: "join", Dpar: "dpar", Meet: "meet", Vee: "vee", Arrow: "arrow"}


def required_operations(term: Formula) -> FrozenSet[str]:
    """Names of the constants and operations a term uses"""
    names = set()
    for kind in term.kinds():
        for table in (CONSTANT_NAMES, UNARY_NAMES, BINARY_NAMES):
            if kind in table:
                names.add(table[kind])
    return frozenset(names)


def check_signature(term: Formula, algebra: FiniteAlgebra) -> None:
    """
    Raises:
        SignatureError: If the algebra lacks an operation the term uses
    """
    available = set(algebra.operation_names)
    missing = sorted(required_operations(term) - available)
    if missing:
        raise SignatureError(
            f"Algebra {algebra.name or '<unnamed>'} has no {', '.join(missing)} for term"
        )


def term_operation(term: Formula, algebra: FiniteAlgebra, arity: Optional[int] = None) -> np.ndarray:
    """
    Term operation of the algebra as an array of shape (k,) * arity

    Entry [a1, ..., an] is the value of the term under Xi = ai.

    Raises:
        SignatureError: If the algebra lacks an operation the term uses
        ArityError: If the term uses a variable beyond the arity
    """
    check_signature(term, algebra)
    arity = term.max_index() if arity is None else arity
    if term.max_index() > arity:
        raise ArityError(f"Term uses X{term.max_index()} but arity is {arity}")

    shape = (algebra.size,) * arity
    grids = np.indices(shape, dtype=np.int64) if arity else np.zeros((0,), dtype=np.int64)
    values: Dict[int, np.ndarray] = {}
    for node in term.post_order():
        kind = type(node)
        if kind is Var:
            result = grids[node.index - 1]
        elif kind in CONSTANT_NAMES:
            result = np.full(shape, algebra.constants[CONSTANT_NAMES[kind]], dtype=np.int64)
        elif kind in UNARY_NAMES:
            result = algebra.unary[UNARY_NAMES[kind]][values[id(node.operand)]]
        else:
            table = algebra.binary[BINARY_NAMES[kind]]
            result = table[values[id(node.left)], values[id(node.right)]]
        values[id(node)] = result
    return values[id(term)]


def evaluate_term(term: Formula, algebra: FiniteAlgebra, assignment: Sequence[int]) -> int:
    """Value of a term under Xi = assignment[i-1]"""
    if term.max_index() > len(assignment):
        raise ArityError(f"Term uses X{term.max_index()} but only {len(assignment)} values given")
    if any(not 0 <= a < algebra.size for a in assignment):
        raise ValueError(f"Assignment {tuple(assignment)} leaves the carrier")
    operation = term_operation(term, algebra, len(assignment))
    return int(operation[tuple(assignment)])
