"""Formula generation - exhaustive enumeration, random sampling and table representatives"""
import logging
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from src.exceptions import PreconditionError
from src.formula.ast import (
    HALF,
    ONE,
    ZERO,
    Arrow,
    Delta,
    Dpar,
    Flip,
    Formula,
    Join,
    Meet,
    Nabla,
    Neg,
    Vee,
    X,
)
from src.trits.operations import DPAR_TABLE, JOIN_TABLE, MIN_TABLE

logger = logging.getLogger(__name__)

# Leaves (besides variables), unary and binary connectives per signature
SIGNATURES: Dict[str, Tuple[tuple, tuple, tuple]] = {
    "core": ((ZERO, HALF), (), (Join, Dpar, Meet)),
    "sugared": ((ZERO, HALF, ONE), (Neg, Nabla, Delta, Flip), (Join, Dpar, Meet, Vee, Arrow)),
    "post": ((ZERO, HALF, ONE), (Neg, Nabla), (Vee, Meet)),
    "boolean": ((ZERO, ONE), (Neg,), (Vee, Meet)),
}


def _signature(name: str):
    if name not in SIGNATURES:
        raise ValueError(f"Unknown signature {name!r}; choose from {', '.join(SIGNATURES)}")
    return SIGNATURES[name]


def leaves(variables: int, signature: str = "core") -> List[Formula]:
    constants, _, _ = _signature(signature)
    return list(constants) + [X(i) for i in range(1, variables + 1)]


def formulas_by_size(max_size: int, variables: int, signature: str = "core") -> List[List[Formula]]:
    """
    All formulas grouped by node count

    Returns:
        A list whose entry s holds every formula with exactly s nodes (entry 0 is empty)
    """
    _, unary, binary = _signature(signature)
    by_size: List[List[Formula]] = [[] for _ in range(max_size + 1)]
    if max_size >= 1:
        by_size[1] = leaves(variables, signature)
    for size in range(2, max_size + 1):
        current = by_size[size]
        for kind in unary:
            current.extend(kind(operand) for operand in by_size[size - 1])
        for kind in binary:
            for left_size in range(1, size - 1):
                right_size = size - 1 - left_size
                for left in by_size[left_size]:
                    current.extend(kind(left, right) for right in by_size[right_size])
    return by_size


def enumerate_formulas(max_size: int, variables: int, signature: str = "core") -> Iterator[Formula]:
    """Every formula with at most max_size nodes over X1..X<variables>, smallest first"""
    for group in formulas_by_size(max_size, variables, signature):
        yield from group


def random_formula(
    rng: np.random.Generator, size: int, variables: int, signature: str = "core"
) -> Formula:
    """
    Random formula with about `size` nodes

    Signatures without unary connectives cannot build even sizes; those
    are rounded down by one.
    """
    constants, unary, binary = _signature(signature)
    atoms = list(constants) + [X(i) for i in range(1, variables + 1)]

    def build(budget: int) -> Formula:
        if budget <= 1 or (budget == 2 and not unary):
            return atoms[rng.integers(len(atoms))]
        if unary and (budget == 2 or rng.random() < 0.3):
            return unary[rng.integers(len(unary))](build(budget - 1))
        left_size = int(rng.integers(1, budget - 1))
        kind = binary[rng.integers(len(binary))]
        return kind(build(left_size), build(budget - 1 - left_size))

    return build(size)


_CORE_TABLES = {
    Join: np.array(JOIN_TABLE, dtype=np.int8),
    Dpar: np.array(DPAR_TABLE, dtype=np.int8),
    Meet: np.array(MIN_TABLE, dtype=np.int8),
}


def representatives(m: int, limit: Optional[int] = None) -> Dict[tuple, Formula]:
    """
    Shallowest core formula for every table reachable from 0, h, X1..Xm

    Breadth-first closure under #, d and &: each round combines the tables
    found in the previous round with every known table, and a table keeps
    the first formula that reached it.

    Args:
        m: Arity, 1 at most
        limit: Stop once this many tables are known

    Returns:
        Map from value tuples (valuation-index order) to formulas
    """
    if m < 0 or m > 1:
        raise PreconditionError(f"Representative closure is limited to arity <= 1, got {m}")

    width = 3 ** m
    found: Dict[tuple, Formula] = {}
    for leaf in leaves(m, "core"):
        if leaf is ZERO:
            values = (0,) * width
        elif leaf is HALF:
            values = (1,) * width
        else:
            values = (0, 1, 2)
        found.setdefault(values, leaf)

    frontier = set(found)
    round_number = 0
    while frontier and (limit is None or len(found) < limit):
        round_number += 1
        known = list(found)
        fresh = []
        for kind, table in _CORE_TABLES.items():
            for a in known:
                for b in known:
                    if a not in frontier and b not in frontier:
                        continue
                    values = tuple(int(v) for v in table[list(a), list(b)])
                    if values not in found:
                        found[values] = kind(found[a], found[b])
                        fresh.append(values)
        frontier = set(fresh)
        logger.debug(f"Representative closure round {round_number}: {len(found)} tables")

    logger.info(f"Representative closure for m={m} reached {len(found)} tables")
    return found
