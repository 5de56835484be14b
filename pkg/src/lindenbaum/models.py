"""Lindenbaum algebras in RM-logic - Mod(T), truth-table restrictions and their certification"""
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

import numpy as np

from src.algebra.axioms import AxiomSet, check_axioms, rm_axioms
from src.algebra.catalogue import faces_algebra, trivial
from src.algebra.free import RM_TABLES
from src.algebra.finite_algebra import FiniteAlgebra
from src.algebra.isomorphism import iso_check
from src.config import Config
from src.exceptions import AlgebraSizeError, ArityError, InvariantViolation
from src.formula.ast import Dpar, Formula, Join, Meet
from src.formula.generation import random_formula
from src.formula.printer import render
from src.formula.synthesis import synthesize
from src.semantics.consequence import Theory
from src.semantics.evaluator import table
from src.semantics.truth_table import TruthTable
from src.semantics.valuation import Valuation
from src.trits import TRITS, Trit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ModSet:
    """Valuations (by index) where every premise takes the value h"""

    m: int
    valuations: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.valuations)

    def __contains__(self, index: int) -> bool:
        return index in self.valuations

    def as_valuations(self) -> List[Valuation]:
        return [Valuation(self.m, v) for v in self.valuations]

    def to_dict(self) -> Dict[str, Any]:
        return {"m": self.m, "valuations": [v.to_json() for v in self.as_valuations()]}


def _check_arity(theory: Theory, m: int) -> None:
    needed = theory.arity()
    if needed > m:
        raise ArityError(f"Theory uses X{needed} but arity is {m}")


def mod_set(theory: Theory, m: Optional[int] = None) -> ModSet:
    """
    Intersection of the h-preimages of the premises (and of the constant h)

    An empty theory leaves every valuation.
    """
    m = theory.arity() if m is None else m
    _check_arity(theory, m)
    mask = np.ones(3 ** m, dtype=bool)
    for premise in theory.tables(m):
        mask &= premise.half
    return ModSet(m, tuple(int(v) for v in np.flatnonzero(mask)))


def restriction(formula_table: TruthTable, mod: ModSet) -> Tuple[int, ...]:
    """Codes of a table on the valuations of Mod(T), in index order"""
    codes = formula_table.codes()
    return tuple(int(codes[v]) for v in mod.valuations)


def class_index(formula: Formula, mod: ModSet) -> int:
    """Index in F_|Mod| of the face given by the formula's restriction to Mod(T)"""
    index = 0
    for code in restriction(table(formula, mod.m), mod):
        index = index * 3 + code
    return index


@dataclass
class LindenbaumAlgebra:
    """
    Lindenbaum algebra of a theory with its certification

    Carrier elements are the restrictions to Mod(T) of the definable tables;
    `elements` maps each restriction to its carrier index. certification is
    "isomorphism" (checked against F_n), "cardinality" (size and the
    two-variable RM equations) or "trivial" (Mod(T) empty).
    """

    theory: Theory
    mod: ModSet
    algebra: FiniteAlgebra
    certification: str
    elements: Dict[Tuple[int, ...], int] = field(default_factory=dict)
    isomorphism: Optional[Dict[int, int]] = field(default=None)

    @property
    def dimension(self) -> int:
        return len(self.mod)

    def element_of(self, formula_table: TruthTable) -> int:
        """
        Carrier element holding a table of arity m

        Raises:
            ArityError: If the table arity differs from the algebra's
        """
        if formula_table.m != self.mod.m:
            raise ArityError(f"Table of arity {formula_table.m} in a Lindenbaum algebra of arity {self.mod.m}")
        return self.elements[restriction(formula_table, self.mod)]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mod": self.mod.to_dict(),
            "size": self.algebra.size,
            "faces_dimension": self.dimension,
            "certification": self.certification,
        }


def _small_equations(axioms: AxiomSet, max_arity: int) -> AxiomSet:
    kept = tuple(eq for eq in axioms.equations if eq.arity <= max_arity)
    return AxiomSet(f"{axioms.name}_arity{max_arity}", kept, axioms.description)


def _restricted_closure(mod: ModSet, weights: np.ndarray) -> np.ndarray:
    """
    Restriction indices reachable from 0, h and X1..Xm under #, d, &

    Indices come in discovery order: the generators first, then each round
    of new restrictions in increasing index order.
    """
    n = len(mod)
    columns = list(mod.valuations)
    start = [TruthTable.constant(mod.m, v).codes()[columns] for v in (Trit.ZERO, Trit.HALF)]
    start += [TruthTable.coordinate(mod.m, i).codes()[columns] for i in range(1, mod.m + 1)]

    seen = np.zeros(3 ** n, dtype=bool)
    order: List[int] = []
    for index in (np.stack(start).astype(np.int64) @ weights):
        if not seen[index]:
            seen[index] = True
            order.append(int(index))
    frontier = np.array(order, dtype=np.int64)

    while frontier.size:
        new = (frontier[:, None] // weights) % 3
        known = (np.array(order, dtype=np.int64)[:, None] // weights) % 3
        produced = [
            (op[left, right].astype(np.int64) @ weights).ravel()
            for op in RM_TABLES.values()
            for left, right in ((new[:, None, :], known[None, :, :]), (known[:, None, :], new[None, :, :]))
        ]
        candidates = np.unique(np.concatenate(produced))
        frontier = candidates[~seen[candidates]]
        seen[frontier] = True
        order.extend(int(i) for i in frontier)
    return np.array(order, dtype=np.int64)


def _restricted_algebra(mod: ModSet) -> Tuple[FiniteAlgebra, Dict[Tuple[int, ...], int]]:
    """
    The definable restrictions with the pointwise #, d, & computed on their codes

    Raises:
        InvariantViolation: If the restrictions are not closed under the operations
    """
    n = len(mod)
    weights = 3 ** np.arange(n - 1, -1, -1, dtype=np.int64)
    order = _restricted_closure(mod, weights)
    position = np.full(3 ** n, -1, dtype=np.int64)
    position[order] = np.arange(len(order))
    codes = (order[:, None] // weights) % 3

    binary = {}
    for name, op in RM_TABLES.items():
        result = position[op[codes[:, None, :], codes[None, :, :]].astype(np.int64) @ weights]
        if (result < 0).any():
            raise InvariantViolation(f"Restrictions to Mod(T) are not closed under {name}")
        binary[name] = result

    half = int(weights.sum())
    constants = {"zero": int(position[0]), "half": int(position[half])}
    labels = ["".join(TRITS[c].symbol for c in row) for row in codes]
    elements = {tuple(int(c) for c in row): i for i, row in enumerate(codes)}
    algebra = FiniteAlgebra(len(order), constants, {}, binary, labels, f"lind({n})")
    return algebra, elements


def lindenbaum(theory: Theory, m: Optional[int] = None) -> LindenbaumAlgebra:
    """
    Restrictions to Mod(T) of the arity-m tables, with the pointwise RM operations

    The carrier is generated from the restricted constants and variables,
    so every element is the class of some formula; it is then certified
    against the faces of the |Mod(T)|-cube.

    Raises:
        AlgebraSizeError: If |Mod(T)| exceeds CUBIC_LIND_MAX_TABLE_DIM
        InvariantViolation: If the certification fails
    """
    mod = mod_set(theory, m)
    n = len(mod)
    if n == 0:
        logger.info("Mod(T) is empty; Lindenbaum algebra is trivial")
        return LindenbaumAlgebra(theory, mod, trivial(), "trivial", {(): 0})
    if n > Config.LIND_MAX_TABLE_DIM:
        raise AlgebraSizeError(
            f"|Mod(T)| = {n} exceeds CUBIC_LIND_MAX_TABLE_DIM={Config.LIND_MAX_TABLE_DIM}"
        )

    algebra, elements = _restricted_algebra(mod)
    if algebra.size != 3 ** n:
        raise InvariantViolation(f"Only {algebra.size} of the 3^{n} restrictions to Mod(T) are definable")

    if n <= Config.iso_max_dimension():
        mapping = iso_check(algebra, faces_algebra(n))
        if mapping is None:
            raise InvariantViolation(f"Lindenbaum algebra with |Mod| = {n} is not isomorphic to F_{n}")
        return LindenbaumAlgebra(theory, mod, algebra, "isomorphism", elements, mapping)

    logger.warning(f"|Mod(T)| = {n} is beyond the isomorphism bound; certifying by cardinality")
    report = check_axioms(algebra, _small_equations(rm_axioms(), 2))
    if not report.passed:
        raise InvariantViolation(f"Lindenbaum algebra fails {report.failure.describe(algebra)}")
    return LindenbaumAlgebra(theory, mod, algebra, "cardinality", elements)


def lind(theory: Theory, m: Optional[int] = None) -> FiniteAlgebra:
    return lindenbaum(theory, m).algebra


@dataclass(frozen=True)
class CongruenceReport:
    checked: int
    failures: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


def _variant(formula_table: TruthTable, mod: ModSet, rng: np.random.Generator) -> TruthTable:
    """A table agreeing with the given one on Mod(T) and random elsewhere"""
    codes = rng.integers(0, 3, size=3 ** mod.m)
    original = formula_table.codes()
    for v in mod.valuations:
        codes[v] = original[v]
    return TruthTable.from_codes(mod.m, codes)


def congruence_check(
    theory: Theory, m: int, pairs: int = 100, size: int = 6, seed: Optional[int] = None
) -> CongruenceReport:
    """
    Check that equality of restrictions to Mod(T) is respected by #, d and &

    For random formulas a, b and formulas a', b' synthesized to agree with
    them on Mod(T) only, op(a, b) and op(a', b') must restrict equally.
    """
    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    mod = mod_set(theory, m)
    failures: List[str] = []
    for _ in range(pairs):
        a = random_formula(rng, size, m, "core")
        b = random_formula(rng, size, m, "core")
        a2 = synthesize(_variant(table(a, m), mod, rng))
        b2 = synthesize(_variant(table(b, m), mod, rng))
        for op in (Join, Dpar, Meet):
            if restriction(table(op(a, b), m), mod) != restriction(table(op(a2, b2), m), mod):
                failures.append(f"{op.__name__} breaks the congruence on {render(a)}, {render(b)}")
    report = CongruenceReport(pairs * 3, tuple(failures))
    logger.info(f"Congruence check over {pairs} pairs: {'passed' if report.passed else 'failed'}")
    return report
