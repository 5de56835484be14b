"""Axiom sets - Kleene, Post and RM equations, and exhaustive checking in finite algebras"""
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
import yaml

from src.algebra.finite_algebra import FiniteAlgebra
from src.algebra.terms import required_operations, term_operation
from src.exceptions import SignatureError
from src.formula.ast import Dpar, Formula, Join, X
from src.formula.parser import parse_many
from src.formula.printer import render
from src.formula.rewrite import dpar_post_term, join_post_term, to_rm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Equation:
    name: str
    lhs: Formula
    rhs: Formula

    @property
    def arity(self) -> int:
        return max(self.lhs.max_index(), self.rhs.max_index())

    def __str__(self) -> str:
        return f"{render(self.lhs)} = {render(self.rhs)}"


@dataclass(frozen=True)
class AxiomSet:
    """Named list of equations; variables are X1, X2, ..."""

    name: str
    equations: Tuple[Equation, ...]
    description: str = ""

    def operations(self) -> frozenset:
        names = set()
        for equation in self.equations:
            names |= required_operations(equation.lhs) | required_operations(equation.rhs)
        return frozenset(names)

    def __len__(self) -> int:
        return len(self.equations)


@dataclass(frozen=True)
class AxiomFailure:
    """First failing equation with its least witnessing assignment"""

    equation: Equation
    assignment: Tuple[int, ...]
    lhs_value: int
    rhs_value: int

    def describe(self, algebra: FiniteAlgebra) -> str:
        values = ", ".join(
            f"X{i}={algebra.label(a)}" for i, a in enumerate(self.assignment, start=1)
        )
        return (
            f"{self.equation.name}: {self.equation} fails at {values or '()'} "
            f"({algebra.label(self.lhs_value)} != {algebra.label(self.rhs_value)})"
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "equation": self.equation.name,
            "text": str(self.equation),
            "assignment": list(self.assignment),
            "lhs": self.lhs_value,
            "rhs": self.rhs_value,
        }


@dataclass(frozen=True)
class AxiomReport:
    algebra: str
    axiom_set: str
    checked: int
    failure: Optional[AxiomFailure] = field(default=None)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "algebra": self.algebra,
            "axioms": self.axiom_set,
            "checked": self.checked,
            "passed": self.passed,
            "failure": self.failure.to_dict() if self.failure else None,
        }


class AxiomLoader:
    """Loads and caches axiom sets from YAML files"""

    def __init__(self, axioms_dir: Optional[str] = None):
        """
        Initialize axiom loader

        Args:
            axioms_dir: Directory holding <name>.yaml files (defaults to the bundled axioms/)
        """
        if axioms_dir is None:
            self.axioms_dir = Path(__file__).parent / "axioms"
        else:
            self.axioms_dir = Path(axioms_dir)

        self._cache: Dict[str, AxiomSet] = {}

    def load_data(self, name: str) -> Dict[str, Any]:
        """
        Raises:
            FileNotFoundError: If the axiom file doesn't exist
            yaml.YAMLError: If YAML parsing fails
        """
        axiom_file = self.axioms_dir / f"{name}.yaml"
        if not axiom_file.exists():
            raise FileNotFoundError(f"Axiom set '{name}' not found at {axiom_file}")
        with open(axiom_file, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)

    def load_set(self, name: str) -> AxiomSet:
        """
        Load an axiom set, with the equations of its includes first

        Args:
            name: File name without the .yaml extension

        Returns:
            The parsed AxiomSet
        """
        if name in self._cache:
            return self._cache[name]

        data = self.load_data(name)
        equations: List[Equation] = []
        for included in data.get("includes", []):
            equations.extend(self.load_set(included).equations)
        for entry in data.get("equations", []):
            lhs, rhs = parse_many([entry["lhs"], entry["rhs"]])
            equations.append(Equation(entry["name"], lhs, rhs))

        axiom_set = AxiomSet(data.get("name", name), tuple(equations), data.get("description", ""))
        logger.debug(f"Loaded axiom set {name} with {len(axiom_set)} equations")
        self._cache[name] = axiom_set
        return axiom_set

    def clear_cache(self):
        self._cache.clear()

    def list_available_sets(self) -> List[str]:
        return sorted(f.stem for f in self.axioms_dir.glob("*.yaml")) + ["rm"]


_default_loader = AxiomLoader()


def kleene_axioms() -> AxiomSet:
    return _default_loader.load_set("kleene")


def post_axioms() -> AxiomSet:
    return _default_loader.load_set("post")


@lru_cache(maxsize=1)
def rm_axioms() -> AxiomSet:
    """
    Equations for RM-algebras

    The Kleene and Post equations translated into 0, h, #, d, & and the
    two definitional equations tying # and d to their Post terms.
    """
    translated = [
        Equation(f"rm_{eq.name}", to_rm(eq.lhs), to_rm(eq.rhs)) for eq in post_axioms().equations
    ]
    x, y = X(1), X(2)
    glue = [
        Equation("join_definition", Join(x, y), to_rm(join_post_term())),
        Equation("dpar_definition", Dpar(x, y), to_rm(dpar_post_term())),
    ]
    return AxiomSet("rm", tuple(translated + glue), "RM-algebra (0, h, #, d, &)")


def axiom_set_named(name: str) -> AxiomSet:
    if name == "rm":
        return rm_axioms()
    return _default_loader.load_set(name)


def check_equation(algebra: FiniteAlgebra, equation: Equation) -> Optional[AxiomFailure]:
    """Evaluate both sides over every assignment; the least failing one is returned"""
    arity = equation.arity
    lhs = term_operation(equation.lhs, algebra, arity)
    rhs = term_operation(equation.rhs, algebra, arity)
    mismatch = np.asarray(lhs != rhs)
    if not mismatch.any():
        return None
    assignment = tuple(int(a) for a in np.argwhere(mismatch)[0]) if arity else ()
    return AxiomFailure(equation, assignment, int(lhs[assignment]), int(rhs[assignment]))


def check_axioms(algebra: FiniteAlgebra, axioms: AxiomSet) -> AxiomReport:
    """
    Check every equation of an axiom set exhaustively

    Raises:
        SignatureError: If the algebra lacks an operation the axioms use
    """
    missing = sorted(axioms.operations() - set(algebra.operation_names))
    if missing:
        raise SignatureError(
            f"Axiom set {axioms.name} needs {', '.join(missing)}, missing from {algebra.name or '<unnamed>'}"
        )
    for count, equation in enumerate(axioms.equations, start=1):
        failure = check_equation(algebra, equation)
        if failure is not None:
            logger.info(f"{algebra.name} fails {axioms.name}: {failure.describe(algebra)}")
            return AxiomReport(algebra.name, axioms.name, count, failure)
    logger.info(f"{algebra.name} satisfies {axioms.name} ({len(axioms)} equations)")
    return AxiomReport(algebra.name, axioms.name, len(axioms))
