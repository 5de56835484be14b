"""Algebra catalogue - the three-element algebras, face algebras, products and powersets"""
import logging
from pathlib import Path
from typing import List, Optional

import numpy as np

from src.algebra.finite_algebra import (
    RM_SIGNATURE,
    SIGNATURES,
    FiniteAlgebra,
    Signature,
)
from src.config import Config
from src.exceptions import AlgebraFormatError, AlgebraSizeError
from src.trits import TRITS, Trit
from src.trits.operations import (
    DPAR_TABLE,
    JOIN_TABLE,
    MAX_TABLE,
    MIN_TABLE,
    NABLA_TABLE,
    NEG_TABLE,
)

logger = logging.getLogger(__name__)

TRIT_LABELS = [t.symbol for t in TRITS]


def _grid(table) -> np.ndarray:
    return np.array([[int(cell) for cell in row] for row in table], dtype=np.int64)


def _row(table) -> np.ndarray:
    return np.array([int(cell) for cell in table], dtype=np.int64)


def zeta_rm() -> FiniteAlgebra:
    """The RM-algebra on {0, h, 1}: constants 0, h and the tables of #, d, &"""
    return FiniteAlgebra(
        3,
        {"zero": int(Trit.ZERO), "half": int(Trit.HALF)},
        {},
        {"join": _grid(JOIN_TABLE), "dpar": _grid(DPAR_TABLE), "meet": _grid(MIN_TABLE)},
        list(TRIT_LABELS),
        "zeta_rm",
    )


def zeta_post() -> FiniteAlgebra:
    """The Post algebra of order 3 on {0, h, 1}"""
    return FiniteAlgebra(
        3,
        {"zero": int(Trit.ZERO), "half": int(Trit.HALF), "one": int(Trit.ONE)},
        {"neg": _row(NEG_TABLE), "nabla": _row(NABLA_TABLE)},
        {"vee": _grid(MAX_TABLE), "meet": _grid(MIN_TABLE)},
        list(TRIT_LABELS),
        "zeta_post",
    )


def boolean_two() -> FiniteAlgebra:
    """The two-element boolean algebra"""
    return FiniteAlgebra(
        2,
        {"zero": 0, "one": 1},
        {"neg": np.array([1, 0])},
        {"vee": np.array([[0, 1], [1, 1]]), "meet": np.array([[0, 0], [0, 1]])},
        ["0", "1"],
        "boolean_two",
    )


def trivial(signature: Signature = RM_SIGNATURE) -> FiniteAlgebra:
    """The one-element algebra of a signature"""
    return FiniteAlgebra(
        1,
        {name: 0 for name in signature.constants},
        {name: np.zeros(1, dtype=np.int64) for name in signature.unary},
        {name: np.zeros((1, 1), dtype=np.int64) for name in signature.binary},
        ["*"],
        f"trivial_{signature.name}",
    )


def _digits(size: int, n: int) -> np.ndarray:
    """Rows are the base-size digit vectors of 0..size^n - 1, most significant first"""
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grid = np.indices((size,) * n).reshape(n, -1).T
    return grid.astype(np.int64)


def power(base: FiniteAlgebra, n: int, name: Optional[str] = None) -> FiniteAlgebra:
    """
    Direct power base^n with coordinatewise operations

    Elements are indexed by their coordinate vectors read as base-k numbers,
    first coordinate most significant.
    """
    k = base.size
    digits = _digits(k, n)
    weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    size = k ** n

    constants = {c: int(sum(value * w for w in weights)) for c, value in base.constants.items()}
    unary = {op: table[digits] @ weights for op, table in base.unary.items()}
    binary = {
        op: table[digits[:, None, :], digits[None, :, :]] @ weights
        for op, table in base.binary.items()
    }
    labels = ["".join(base.label(int(d)) for d in row) for row in digits] if n else ["()"]
    return FiniteAlgebra(size, constants, unary, binary, labels, name or f"{base.name}^{n}")


def product(first: FiniteAlgebra, second: FiniteAlgebra) -> FiniteAlgebra:
    """
    Direct product; (a, b) has index a * |second| + b

    Both factors must carry the same operation names.
    """
    if set(first.operation_names) != set(second.operation_names):
        raise AlgebraFormatError("Product factors must have the same operations")
    k1, k2 = first.size, second.size
    a = np.repeat(np.arange(k1), k2)
    b = np.tile(np.arange(k2), k1)

    constants = {c: first.constants[c] * k2 + second.constants[c] for c in first.constants}
    unary = {op: first.unary[op][a] * k2 + second.unary[op][b] for op in first.unary}
    binary = {
        op: first.binary[op][a[:, None], a[None, :]] * k2 + second.binary[op][b[:, None], b[None, :]]
        for op in first.binary
    }
    labels = [f"({first.label(int(x))},{second.label(int(y))})" for x, y in zip(a, b)]
    return FiniteAlgebra(k1 * k2, constants, unary, binary, labels, f"{first.name}x{second.name}")


def faces_algebra(n: int, signature: str = "rm") -> FiniteAlgebra:
    """
    F_n: the faces of the n-cube under the pointwise operations, labelled by words

    Raises:
        AlgebraSizeError: If n exceeds the configured face dimension bound
    """
    if n > Config.MAX_FACE_DIM:
        raise AlgebraSizeError(f"F_{n} exceeds CUBIC_MAX_FACE_DIM={Config.MAX_FACE_DIM}")
    base = {"rm": zeta_rm, "post": zeta_post}[signature]()
    algebra = power(base, n, f"F_{n}")
    logger.debug(f"Tabled F_{n} with {algebra.size} faces")
    return algebra


def powerset_algebra(n: int) -> FiniteAlgebra:
    """B_n: subsets of {1..n}; bit i of the index (most significant first) marks element i"""
    algebra = power(boolean_two(), n, f"B_{n}")
    digits = _digits(2, n)
    algebra.labels = [
        "{" + ",".join(str(i + 1) for i in np.flatnonzero(row)) + "}" for row in digits
    ]
    return algebra


def builtin_names() -> List[str]:
    return ["zeta_rm", "zeta_post", "boolean_two", "trivial", "F<n>", "B<n>"]


def load_algebra(name_or_path: str) -> FiniteAlgebra:
    """
    Resolve a built-in algebra name or read an algebra text file

    Built-ins: zeta_rm, zeta_post, boolean_two, trivial, F<n> (faces of
    the n-cube), B<n> (powerset of an n-set).

    Raises:
        AlgebraFormatError: If the name is unknown and no such file exists
    """
    simple = {"zeta_rm": zeta_rm, "zeta_post": zeta_post, "boolean_two": boolean_two}
    if name_or_path in simple:
        return simple[name_or_path]()
    if name_or_path == "trivial":
        return trivial()
    if name_or_path[:1] in ("F", "B") and name_or_path[1:].isdigit():
        n = int(name_or_path[1:])
        return faces_algebra(n) if name_or_path[0] == "F" else powerset_algebra(n)

    path = Path(name_or_path)
    if not path.is_file():
        raise AlgebraFormatError(
            f"Unknown algebra {name_or_path!r}; expected a file or one of {', '.join(builtin_names())}"
        )
    return FiniteAlgebra.from_text(path.read_text(encoding="utf-8"), name=path.stem)


def signature_named(name: str) -> Signature:
    try:
        return SIGNATURES[name]
    except KeyError:
        raise AlgebraFormatError(f"Unknown signature {name!r}") from None


def boolean_elements(algebra: FiniteAlgebra) -> List[int]:
    """Elements c with N c = c (needs a nabla, or the RM form d(c, 0))"""
    if "nabla" in algebra.unary:
        nabla = algebra.unary["nabla"]
    else:
        nabla = algebra.binary["dpar"][:, algebra.constants["zero"]]
    return [int(c) for c in np.flatnonzero(nabla == np.arange(algebra.size))]

