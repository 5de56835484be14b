"""Clone closure - operations on {0, h, 1} term-definable from a set of generators"""
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from src.config import Config
from src.exceptions import PreconditionError
from src.trits import TRITS, TritOps
from src.trits.operations import (
    DELTA_TABLE,
    DPAR_TABLE,
    JOIN_TABLE,
    MAX_TABLE,
    MIN_TABLE,
    NABLA_TABLE,
    NEG_TABLE,
)

logger = logging.getLogger(__name__)

# A binary operation f on {0, h, 1} is the length-9 vector f(x, y) in row-major order,
# encoded as the base-3 number of that vector.
CELLS = 9
_WEIGHTS = 3 ** np.arange(CELLS - 1, -1, -1, dtype=np.int64)
_X = np.repeat(np.arange(3), 3)
_Y = np.tile(np.arange(3), 3)

CONSTANTS = {"zero": 0, "half": 1, "one": 2}
UNARY = {
    "neg": NEG_TABLE,
    "nabla": NABLA_TABLE,
    "delta": DELTA_TABLE,
    "flip": tuple(TritOps.flip(t) for t in TRITS),
}
BINARY = {
    "join": JOIN_TABLE,
    "dpar": DPAR_TABLE,
    "meet": MIN_TABLE,
    "vee": MAX_TABLE,
}


def encode(values: np.ndarray) -> np.ndarray:
    """Codes of the rows of an (k, 9) array of trit codes"""
    return np.asarray(values, dtype=np.int64) @ _WEIGHTS


def decode(codes: np.ndarray) -> np.ndarray:
    codes = np.atleast_1d(np.asarray(codes, dtype=np.int64))
    return (codes[:, None] // _WEIGHTS[None, :]) % 3


def unary_vector(table: Sequence) -> np.ndarray:
    """A unary operation as the binary operation f(x, y) = g(x)"""
    return np.array([int(v) for v in table], dtype=np.int64)[_X]


def binary_vector(table: Sequence[Sequence]) -> np.ndarray:
    grid = np.array([[int(v) for v in row] for row in table], dtype=np.int64)
    return grid[_X, _Y]


PROJECTIONS = {"pi1": _X.copy(), "pi2": _Y.copy()}


def named_vector(name: str) -> np.ndarray:
    """The arity-2 vector of a named constant, unary or binary operation"""
    if name in CONSTANTS:
        return np.full(CELLS, CONSTANTS[name], dtype=np.int64)
    if name in UNARY:
        return unary_vector(UNARY[name])
    if name in BINARY:
        return binary_vector(BINARY[name])
    if name in PROJECTIONS:
        return PROJECTIONS[name]
    raise ValueError(
        f"Unknown operation {name!r}; choose from "
        f"{', '.join(list(CONSTANTS) + list(UNARY) + list(BINARY) + list(PROJECTIONS))}"
    )


@dataclass(frozen=True)
class Clone:
    """Binary part of a clone on {0, h, 1} (unary members appear as f(x, y) = g(x))"""

    generators: Tuple[str, ...]
    member_mask: np.ndarray
    rounds: int

    @property
    def size(self) -> int:
        return int(self.member_mask.sum())

    def contains_vector(self, vector: np.ndarray) -> bool:
        return bool(self.member_mask[int(encode(vector))])

    def contains(self, name: str) -> bool:
        return self.contains_vector(named_vector(name))

    def contains_unary(self, table: Sequence) -> bool:
        return self.contains_vector(unary_vector(table))

    def members(self) -> np.ndarray:
        return decode(np.flatnonzero(self.member_mask))

    def unary_members(self) -> List[Tuple[int, int, int]]:
        """Members that ignore their second argument, as value triples"""
        result = []
        for row in self.members():
            grid = row.reshape(3, 3)
            if (grid == grid[:, :1]).all():
                result.append(tuple(int(v) for v in grid[:, 0]))
        return result


def clone_closure(
    generators: Iterable[str], max_arity: Optional[int] = None, chunk: int = 32
) -> Clone:
    """
    Least set of binary operations holding the projections, the named constants
    and generators, closed under composition with the generators

    Semi-naive fixpoint: each round composes only operations found in the
    previous round with everything known.

    Raises:
        PreconditionError: If an arity bound other than 2 is requested
    """
    max_arity = Config.CLONE_MAX_ARITY if max_arity is None else max_arity
    if max_arity != 2:
        raise PreconditionError(f"Clone closure is computed at arity 2, got {max_arity}")
    names = tuple(dict.fromkeys(generators))
    for name in names:
        named_vector(name)

    unary_ops = [np.array([int(v) for v in UNARY[n]], dtype=np.int64) for n in names if n in UNARY]
    binary_ops = [
        np.array([[int(v) for v in row] for row in BINARY[n]], dtype=np.int64)
        for n in names
        if n in BINARY
    ]

    seen = np.zeros(3 ** CELLS, dtype=bool)
    start = [PROJECTIONS["pi1"], PROJECTIONS["pi2"]]
    start += [named_vector(n) for n in names if n in CONSTANTS]
    start += [unary_vector(UNARY[n]) for n in names if n in UNARY]
    start += [binary_vector(BINARY[n]) for n in names if n in BINARY]
    frontier = np.unique(encode(np.stack(start)))
    seen[frontier] = True

    rounds = 0
    while frontier.size:
        rounds += 1
        new_vectors = decode(frontier)
        known_vectors = decode(np.flatnonzero(seen))
        produced: List[np.ndarray] = [encode(op[new_vectors]) for op in unary_ops]
        for op in binary_ops:
            for begin in range(0, len(new_vectors), chunk):
                block = new_vectors[begin:begin + chunk]
                produced.append(encode(op[block[:, None, :], known_vectors[None, :, :]]).ravel())
                produced.append(encode(op[known_vectors[:, None, :], block[None, :, :]]).ravel())
        candidates = np.unique(np.concatenate(produced)) if produced else np.array([], dtype=np.int64)
        frontier = candidates[~seen[candidates]]
        seen[frontier] = True
        logger.debug(f"Clone round {rounds}: {frontier.size} new, {int(seen.sum())} total")

    seen.setflags(write=False)
    clone = Clone(names, seen, rounds)
    logger.info(f"Clone of {', '.join(names)} has {clone.size} binary operations after {rounds} rounds")
    return clone


def refute_case_shapes() -> Dict[str, int]:
    """
    Count unary pairs (f, g) with min(x, y) = f(x) # g(y) or min(x, y) = d(f(x), g(y))

    Both counts are zero when neither shape defines the meet.
    """
    unary = decode(np.arange(27))[:, -3:]
    f = unary[:, None, :, None]
    g = unary[None, :, None, :]
    target = np.array([[int(v) for v in row] for row in MIN_TABLE], dtype=np.int64)
    result = {"pairs": int(len(unary) ** 2)}
    for name, table in (("join", JOIN_TABLE), ("dpar", DPAR_TABLE)):
        op = np.array([[int(v) for v in row] for row in table], dtype=np.int64)
        values = op[f, g]
        matches = (values == target).all(axis=(2, 3))
        result[name] = int(matches.sum())
    return result
