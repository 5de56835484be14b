"""Isomorphism testing for small finite algebras"""
import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.algebra.finite_algebra import FiniteAlgebra
from src.config import Config
from src.exceptions import AlgebraSizeError, SignatureError

logger = logging.getLogger(__name__)


def _same_signature(a: FiniteAlgebra, b: FiniteAlgebra) -> bool:
    return (
        set(a.constants) == set(b.constants)
        and set(a.unary) == set(b.unary)
        and set(a.binary) == set(b.binary)
    )


def _invariants(algebra: FiniteAlgebra) -> List[Tuple]:
    """Per-element data preserved by every isomorphism"""
    elements = np.arange(algebra.size)
    columns = []
    for name in sorted(algebra.constants):
        columns.append(elements == algebra.constants[name])
    for name in sorted(algebra.unary):
        table = algebra.unary[name]
        columns.append(table == elements)
        columns.append(table[table] == elements)
    for name in sorted(algebra.binary):
        table = algebra.binary[name]
        columns.append(table[elements, elements] == elements)
        columns.append((table == elements[:, None]).sum(axis=1))
        columns.append((table == elements[None, :]).sum(axis=0))
    if not columns:
        return [()] * algebra.size
    stacked = np.stack([np.asarray(c, dtype=np.int64) for c in columns], axis=1)
    return [tuple(int(v) for v in row) for row in stacked]


def subalgebra(algebra: FiniteAlgebra, elements) -> np.ndarray:
    """Boolean mask of the subalgebra generated by the elements (constants included)"""
    mask = np.zeros(algebra.size, dtype=bool)
    mask[list(algebra.constants.values())] = True
    mask[list(elements)] = True
    while True:
        members = np.flatnonzero(mask)
        grown = mask.copy()
        for table in algebra.unary.values():
            grown[table[members]] = True
        for table in algebra.binary.values():
            grown[table[np.ix_(members, members)].ravel()] = True
        if (grown == mask).all():
            return mask
        mask = grown


def generating_set(algebra: FiniteAlgebra) -> List[int]:
    """Greedy generators: repeatedly add the least element outside the generated part"""
    generators: List[int] = []
    mask = subalgebra(algebra, generators)
    while not mask.all():
        generators.append(int(np.flatnonzero(~mask)[0]))
        mask = subalgebra(algebra, generators)
    return generators


def _propagate(
    a: FiniteAlgebra, b: FiniteAlgebra, mapping: Dict[int, int]
) -> Optional[Dict[int, int]]:
    """Extend a partial map along every operation; None on a conflict or a collision"""
    mapping = dict(mapping)
    image = {v: k for k, v in mapping.items()}
    if len(image) != len(mapping):
        return None
    frontier = list(mapping)
    while frontier:
        known = list(mapping)
        fresh: List[int] = []

        def assign(x: int, y: int) -> bool:
            if x in mapping:
                return mapping[x] == y
            if y in image:
                return False
            mapping[x] = y
            image[y] = x
            fresh.append(x)
            return True

        for name, table in a.unary.items():
            for x in frontier:
                if not assign(int(table[x]), int(b.unary[name][mapping[x]])):
                    return None
        for name, table in a.binary.items():
            other = b.binary[name]
            for x in frontier:
                for y in known:
                    if not assign(int(table[x, y]), int(other[mapping[x], mapping[y]])):
                        return None
                    if not assign(int(table[y, x]), int(other[mapping[y], mapping[x]])):
                        return None
        frontier = fresh
    return mapping


def is_isomorphism(a: FiniteAlgebra, b: FiniteAlgebra, mapping: Dict[int, int]) -> bool:
    if sorted(mapping) != list(range(a.size)) or sorted(mapping.values()) != list(range(b.size)):
        return False
    phi = np.array([mapping[x] for x in range(a.size)])
    return (
        all(phi[a.constants[c]] == b.constants[c] for c in a.constants)
        and all(np.array_equal(phi[t], b.unary[n][phi]) for n, t in a.unary.items())
        and all(
            np.array_equal(phi[t], b.binary[n][np.ix_(phi, phi)]) for n, t in a.binary.items()
        )
    )


def iso_check(a: FiniteAlgebra, b: FiniteAlgebra) -> Optional[Dict[int, int]]:
    """
    Find an isomorphism from a onto b

    Generators of a are assigned images among the elements of b with the same
    invariants; every assignment is propagated through the operation tables
    and abandoned on the first conflict.

    Returns:
        The element map, or None when the algebras are not isomorphic

    Raises:
        AlgebraSizeError: If either carrier exceeds CUBIC_ISO_MAX_CARRIER
        SignatureError: If the algebras have different operations
    """
    bound = Config.ISO_MAX_CARRIER
    if max(a.size, b.size) > bound:
        raise AlgebraSizeError(f"Isomorphism search is bounded by {bound} elements")
    if not _same_signature(a, b):
        raise SignatureError(f"{a.name} and {b.name} have different operations")
    if a.size != b.size:
        return None

    inv_a, inv_b = _invariants(a), _invariants(b)
    if sorted(inv_a) != sorted(inv_b):
        logger.debug(f"{a.name} and {b.name} differ in element invariants")
        return None

    start = _propagate(a, b, {a.constants[c]: b.constants[c] for c in a.constants})
    if start is None:
        return None
    generators = generating_set(a)
    candidates = {g: [y for y in range(b.size) if inv_b[y] == inv_a[g]] for g in generators}
    explored = 0

    def search(depth: int, mapping: Dict[int, int]) -> Optional[Dict[int, int]]:
        nonlocal explored
        if depth == len(generators):
            return mapping if is_isomorphism(a, b, mapping) else None
        g = generators[depth]
        if g in mapping:
            return search(depth + 1, mapping)
        for y in candidates[g]:
            explored += 1
            extended = _propagate(a, b, {**mapping, g: y})
            if extended is not None:
                found = search(depth + 1, extended)
                if found is not None:
                    return found
        return None

    result = search(0, start)
    logger.info(
        f"Isomorphism {a.name} -> {b.name}: {'found' if result else 'none'} "
        f"({len(generators)} generators, {explored} branches)"
    )
    return result
