"""Consequence - compatibility, the consequence relation and its finite-scale procedures"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np

from src.exceptions import ArityError, IncompatibleTheoryError, InvariantViolation, PreconditionError
from src.formula.ast import HALF, Formula, Meet, Nabla, Neg, Vee
from src.formula.generation import enumerate_formulas
from src.semantics.evaluator import required_arity, table
from src.semantics.truth_table import TruthTable, meet_table_fold
from src.semantics.valuation import Valuation
from src.trits import Trit

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Theory:
    """Finite ordered premise set; duplicates removed, first occurrence kept"""

    formulas: Tuple[Formula, ...] = ()

    @classmethod
    def of(cls, formulas: Iterable[Formula]) -> "Theory":
        unique: List[Formula] = []
        for formula in formulas:
            if formula not in unique:
                unique.append(formula)
        return cls(tuple(unique))

    def __iter__(self):
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __getitem__(self, index: int) -> Formula:
        return self.formulas[index]

    def arity(self, *extra: Formula) -> int:
        return required_arity(*self.formulas, *extra)

    def tables(self, m: int) -> List[TruthTable]:
        return [table(formula, m) for formula in self.formulas]


class Mode(str, Enum):
    COMPATIBLE = "compatible"
    INCOMPATIBLE = "incompatible"


@dataclass(frozen=True)
class Clash:
    """Valuation v and premise positions i <= j whose values clash at v"""

    valuation: Valuation
    first: int
    second: int

    def to_dict(self) -> Dict[str, Any]:
        return {"valuation": self.valuation.to_json(), "premises": [self.first, self.second]}


@dataclass(frozen=True)
class Verdict:
    """
    Outcome of a consequence check

    A failed check carries the least counterexample valuation; an
    incompatible premise set carries its least clash.
    """

    holds: bool
    mode: Mode = Mode.COMPATIBLE
    counterexample: Optional[Valuation] = None
    clash: Optional[Clash] = None

    def __post_init__(self):
        if not self.holds and self.counterexample is None:
            raise InvariantViolation("A failed verdict needs a counterexample")
        if self.mode is Mode.INCOMPATIBLE and self.clash is None:
            raise InvariantViolation("An incompatible verdict needs a clash witness")

    def to_dict(self) -> Dict[str, Any]:
        if self.clash is not None:
            witness = self.clash.to_dict()
        elif self.counterexample is not None:
            witness = {"valuation": self.counterexample.to_json(), "premises": []}
        else:
            witness = None
        return {"holds": self.holds, "mode": self.mode.value, "witness": witness}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Verdict":
        mode = Mode(data["mode"])
        witness = data.get("witness")
        counterexample = clash = None
        if witness is not None:
            valuation = Valuation.from_digits([Trit.parse(s) for s in witness["valuation"]])
            if mode is Mode.INCOMPATIBLE:
                clash = Clash(valuation, *witness["premises"])
            else:
                counterexample = valuation
        return cls(bool(data["holds"]), mode, counterexample, clash)


@dataclass(frozen=True)
class Compatibility:
    compatible: bool
    clash: Optional[Clash] = field(default=None)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "mode": (Mode.COMPATIBLE if self.compatible else Mode.INCOMPATIBLE).value,
            "witness": self.clash.to_dict() if self.clash else None,
        }


def _least_clash(tables: List[TruthTable], m: int, strict: bool) -> Optional[Clash]:
    if not tables:
        return None
    zero = np.stack([t.zero for t in tables])
    one = np.stack([t.one for t in tables])
    bad = zero.any(axis=0) & one.any(axis=0)
    if strict:
        bad |= (~(zero | one)).any(axis=0)
    positions = np.flatnonzero(bad)
    if positions.size == 0:
        return None

    v = int(positions[0])
    values = [t[v] for t in tables]
    for i, value in enumerate(values):
        if strict and value is Trit.HALF:
            return Clash(Valuation(m, v), i, i)
        if value is Trit.HALF:
            continue
        opposite = Trit.ONE if value is Trit.ZERO else Trit.ZERO
        for j in range(i + 1, len(values)):
            if values[j] is opposite:
                return Clash(Valuation(m, v), i, j)
    raise InvariantViolation(f"Clash mask set at valuation {v} without a clashing pair")


def compatibility(
    theory: Theory, m: Optional[int] = None, strict: bool = False
) -> Compatibility:
    """
    Decide whether a premise set is compatible

    Args:
        theory: Premises
        m: Arity (default: largest variable index)
        strict: Read incompatibility literally as "values sum to 1", which also
            lets a premise clash with itself wherever it takes the value h

    Returns:
        Compatibility with the lexicographically least clash (valuation, i, j) when incompatible
    """
    m = _arity(theory, None, m)
    clash = _least_clash(theory.tables(m), m, strict)
    return Compatibility(clash is None, clash)


def _arity(theory: Theory, goal: Optional[Formula], m: Optional[int]) -> int:
    needed = theory.arity(goal) if goal is not None else theory.arity()
    if m is None:
        return needed
    if m < needed:
        raise ArityError(f"Formulas use X{needed} but arity is {m}")
    return m


def _first_false(mask: np.ndarray) -> Optional[int]:
    failing = np.flatnonzero(~mask)
    return int(failing[0]) if failing.size else None


def entails(
    theory: Theory, goal: Formula, m: Optional[int] = None, strict: bool = False
) -> Verdict:
    """
    Decide whether the premises entail the goal

    Incompatible premise sets entail everything. Otherwise the goal must take
    the value h, or a value in {0,1} shared with some premise, at every valuation.

    Returns:
        Verdict with the least failing valuation when the goal does not follow
    """
    m = _arity(theory, goal, m)
    tables = theory.tables(m)
    clash = _least_clash(tables, m, strict)
    if clash is not None:
        return Verdict(True, Mode.INCOMPATIBLE, clash=clash)

    goal_table = table(goal, m)
    size = 3 ** m
    any_zero = np.zeros(size, dtype=bool)
    any_one = np.zeros(size, dtype=bool)
    for premise in tables:
        any_zero |= premise.zero
        any_one |= premise.one
    ok = goal_table.half | (goal_table.one & any_one) | (goal_table.zero & any_zero)
    failing = _first_false(ok)
    if failing is None:
        return Verdict(True)
    return Verdict(False, counterexample=Valuation(m, failing))


def entails_via_meet(theory: Theory, goal: Formula, m: Optional[int] = None) -> Verdict:
    """
    Decide consequence by folding the premise tables with the pointwise intersection

    The premises entail the goal iff (t1 meet ... meet tk) # goal = goal.

    Raises:
        IncompatibleTheoryError: If the premises are incompatible
    """
    m = _arity(theory, goal, m)
    folded = meet_table_fold(theory.tables(m), m)
    if folded is None:
        raise IncompatibleTheoryError("Intersection of premise tables is undefined; use entails")
    goal_table = table(goal, m)
    absorbed = folded.join(goal_table)
    same = (absorbed.zero == goal_table.zero) & (absorbed.one == goal_table.one)
    failing = _first_false(same)
    if failing is None:
        return Verdict(True)
    return Verdict(False, counterexample=Valuation(m, failing))


def meet_term(first: Formula, second: Formula) -> Formula:
    """!N(!t1 & !t2) | (h & N(t1 & !t1) & N(t2 & !t2)), built without a compatibility check"""
    return Vee(
        Neg(Nabla(Meet(Neg(first), Neg(second)))),
        Meet(Meet(HALF, Nabla(Meet(first, Neg(first)))), Nabla(Meet(second, Neg(second)))),
    )


def meet_formula(first: Formula, second: Formula) -> Formula:
    """
    A formula whose table is the pointwise intersection of two compatible formulas

    Raises:
        IncompatibleTheoryError: If the pair is incompatible
    """
    result = compatibility(Theory.of([first, second]))
    if not result.compatible:
        raise IncompatibleTheoryError(f"Formulas clash at {result.clash.valuation}")
    return meet_term(first, second)


def compactness_core(theory: Theory, goal: Formula, m: Optional[int] = None) -> Theory:
    """
    Finite sub-theory that still entails the goal

    For each valuation where the goal is 0 or 1 (in index order) keep a
    premise with the same value there: one already kept if possible,
    otherwise the first such premise.

    Raises:
        PreconditionError: If the premises are incompatible or do not entail the goal
    """
    m = _arity(theory, goal, m)
    verdict = entails(theory, goal, m)
    if verdict.mode is Mode.INCOMPATIBLE:
        raise PreconditionError("Compactness core needs a compatible premise set")
    if not verdict.holds:
        raise PreconditionError(f"Premises do not entail the goal (fails at {verdict.counterexample})")

    tables = theory.tables(m)
    goal_table = table(goal, m)
    chosen: List[int] = []
    for v in np.flatnonzero(~goal_table.half):
        wanted = goal_table[int(v)]
        if any(tables[i][int(v)] is wanted for i in chosen):
            continue
        cover = next(i for i, t in enumerate(tables) if t[int(v)] is wanted)
        chosen.append(cover)

    core = Theory(tuple(theory[i] for i in sorted(chosen)))
    logger.debug(f"Compactness core keeps {len(core)} of {len(theory)} premises")
    return core


def nonmonotonicity_witness(m: int, max_size: int = 3) -> Tuple[Formula, Formula, Formula]:
    """
    Formulas (alpha, beta, gamma) with {alpha} entailing gamma but {alpha & beta} not

    Candidates are tried smallest first; alpha ranges over formulas that
    mention a variable.

    Raises:
        PreconditionError: If m < 1
        InvariantViolation: If no witness exists among the candidates
    """
    if m < 1:
        raise PreconditionError("Nonmonotonicity witness needs arity m >= 1")
    pool = list(enumerate_formulas(max_size, m, "sugared"))

    for a, alpha in enumerate(pool):
        if alpha.max_index() == 0:
            continue
        consequences = [
            g for g, gamma in enumerate(pool) if entails(Theory((alpha,)), gamma, m).holds
        ]
        for beta in pool:
            weakened = Theory((Meet(alpha, beta),))
            for g in consequences:
                verdict = entails(weakened, pool[g], m)
                if not verdict.holds:
                    logger.info(f"Nonmonotonicity witness at m={m} after alpha #{a}")
                    return alpha, beta, pool[g]
    raise InvariantViolation(f"No nonmonotonicity witness among formulas of size <= {max_size}")
