"""Correspondence checks - boolean logic on simplex faces, RM-logic on cube faces"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import pandas as pd

from src.algebra.catalogue import powerset_algebra
from src.algebra.free import FreeRMAlgebra
from src.algebra.isomorphism import iso_check
from src.config import Config
from src.exceptions import PreconditionError
from src.faces import Face, FaceOps, whole
from src.formula.ast import Dpar, Formula, Join, Meet, Neg, Vee, X
from src.formula.generation import representatives
from src.formula.synthesis import synthesize
from src.lindenbaum.boolean import BoolTheory, bool_lind, bool_mod, bool_synthesize, boolean_points
from src.lindenbaum.models import lindenbaum, mod_set
from src.semantics.consequence import Theory, compatibility, entails, meet_formula
from src.semantics.evaluator import is_tautology, table
from src.semantics.truth_table import TruthTable

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorrespondenceRow:
    number: int
    description: str
    passed: bool
    counts: str

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        return f"row {self.number}: {self.description}: {self.status} ({self.counts})"


@dataclass
class CorrespondenceReport:
    which: int
    m: int
    rows: List[CorrespondenceRow] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    def lines(self) -> List[str]:
        return [row.line() for row in self.rows]

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {"row": r.number, "description": r.description, "status": r.status, "counts": r.counts}
                for r in self.rows
            ]
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            "table": self.which,
            "m": self.m,
            "passed": self.passed,
            "rows": self.to_frame().to_dict(orient="records"),
        }


def _agreement(cases: Sequence, check: Callable[..., bool]) -> Tuple[bool, str]:
    agree = sum(1 for case in cases if check(*case))
    return agree == len(cases), f"{agree}/{len(cases)} agree"


@dataclass
class _CubeUniverse:
    """Tables of arity m with synthesized formulas and faces, and the pairs to check"""

    m: int
    tables: List[TruthTable]
    formulas: List[Formula]
    faces: List[Face]
    pairs: List[Tuple[int, int]]
    exhaustive: bool


def _cube_universe(m: int, samples: int, rng: np.random.Generator) -> _CubeUniverse:
    free = FreeRMAlgebra(m)
    if m <= 1:
        indices = list(range(free.size))
        pairs = list(itertools.product(range(free.size), repeat=2))
        exhaustive = True
    else:
        indices = sorted(set(int(i) for i in rng.integers(0, free.size, size=max(2, samples // 4))))
        picks = rng.integers(0, len(indices), size=(samples, 2))
        pairs = [(int(a), int(b)) for a, b in picks]
        exhaustive = False
    tables = [free.table_at(i) for i in indices]
    formulas = [synthesize(t) for t in tables]
    faces = [Face.from_word(t.word) for t in tables]
    return _CubeUniverse(m, tables, formulas, faces, pairs, exhaustive)


def _table2_rows(m: int, samples: int, rng: np.random.Generator) -> List[CorrespondenceRow]:
    u = _cube_universe(m, samples, rng)
    n = 3 ** m
    rows: List[CorrespondenceRow] = []

    def add(description: str, result: Tuple[bool, str]):
        rows.append(CorrespondenceRow(len(rows) + 1, description, *result))

    def word(formula: Formula) -> str:
        return table(formula, m).word

    singles = [(i,) for i in range(len(u.tables))]
    pairs = u.pairs

    add("valuations are the coordinates of the cube", (n == u.faces[0].n, f"{n} valuations, dimension {u.faces[0].n}"))

    free = FreeRMAlgebra(m)
    reached = len(representatives(m)) if m <= 1 else None
    faces_ok = free.size == 3 ** n and (reached is None or reached == free.size)
    detail = f"{free.size} classes, 3^{n} faces" + (f", {reached} reached by terms" if reached else "")
    add("formula classes are the faces", (faces_ok, detail))

    add(
        "tautologies are the whole cube",
        _agreement(singles, lambda i: is_tautology(u.formulas[i], m) == (u.faces[i] == whole(n))),
    )
    vertex_ok, vertex_detail = _agreement(
        singles, lambda i: (not u.tables[i].half.any()) == u.faces[i].is_vertex
    )
    if u.exhaustive:
        vertices = sum(1 for f in u.faces if f.is_vertex)
        vertex_ok = vertex_ok and vertices == 2 ** n
        vertex_detail += f", {vertices} vertices"
    add("boolean classes are the vertices", (vertex_ok, vertex_detail))
    add(
        "theta entails psi iff theta is a subface of psi",
        _agreement(
            pairs,
            lambda i, j: entails(Theory((u.formulas[i],)), u.formulas[j], m).holds
            == FaceOps.is_subface(u.faces[i], u.faces[j]),
        ),
    )
    add(
        "phi # psi is the smallest face containing both",
        _agreement(pairs, lambda i, j: word(Join(u.formulas[i], u.formulas[j])) == FaceOps.join(u.faces[i], u.faces[j]).word),
    )
    add(
        "d(psi, phi) is the antipodal of phi in psi # phi",
        _agreement(pairs, lambda i, j: word(Dpar(u.formulas[i], u.formulas[j])) == FaceOps.dpar(u.faces[i], u.faces[j]).word),
    )
    add(
        "phi & psi is the wedge of the faces",
        _agreement(pairs, lambda i, j: word(Meet(u.formulas[i], u.formulas[j])) == FaceOps.wedge(u.faces[i], u.faces[j]).word),
    )
    add(
        "!phi is the reflection through the center of the cube",
        _agreement(singles, lambda i: word(Neg(u.formulas[i])) == FaceOps.antipodal(whole(n), u.faces[i]).word),
    )
    add(
        "compatible pairs are intersecting faces",
        _agreement(
            pairs,
            lambda i, j: compatibility(Theory.of([u.formulas[i], u.formulas[j]]), m).compatible
            == FaceOps.compatible_faces(u.faces[i], u.faces[j]),
        ),
    )

    def intersection_agrees(i: int, j: int) -> bool:
        face = FaceOps.intersect(u.faces[i], u.faces[j])
        if face is None:
            return True
        return word(meet_formula(u.formulas[i], u.formulas[j])) == face.word

    compatible_pairs = [(i, j) for i, j in pairs if FaceOps.intersect(u.faces[i], u.faces[j]) is not None]
    add("the meet formula is the intersection of faces", _agreement(compatible_pairs, intersection_agrees))
    add(
        "Mod({phi}) is the set of free coordinates",
        _agreement(
            singles,
            lambda i: list(mod_set(Theory((u.formulas[i],)), m).valuations)
            == [k for k, c in enumerate(u.faces[i].word) if c == "h"],
        ),
    )
    add(
        "inclusion coincides with sharpening",
        _agreement(pairs, lambda i, j: FaceOps.is_subface(u.faces[i], u.faces[j]) == FaceOps.sharper_face(u.faces[i], u.faces[j])),
    )

    by_dimension: Dict[int, int] = {}
    for i, face in enumerate(u.faces):
        if face.dimension <= min(Config.iso_max_dimension(), Config.LIND_MAX_TABLE_DIM):
            by_dimension.setdefault(face.dimension, i)

    def lind_matches(i: int) -> bool:
        result = lindenbaum(Theory((u.formulas[i],)), m)
        return result.algebra.size == 3 ** result.dimension and result.certification in ("isomorphism", "trivial")

    ok, detail = _agreement([(i,) for i in by_dimension.values()], lind_matches)
    add("the Lindenbaum algebra of {phi} is F_|Mod|", (ok, f"{detail}, dimensions {sorted(by_dimension)}"))
    return rows


def _table1_rows(m: int) -> List[CorrespondenceRow]:
    points = boolean_points(m)
    k = len(points)
    subsets = [tuple(p for bit, p in zip(mask, points) if bit) for mask in itertools.product((0, 1), repeat=k)]
    formulas = [bool_synthesize(s, m) for s in subsets]
    models = [set(bool_mod(BoolTheory((f,)), m)) for f in formulas]
    all_points = set(points)
    rows: List[CorrespondenceRow] = []

    def add(description: str, result: Tuple[bool, str]):
        rows.append(CorrespondenceRow(len(rows) + 1, description, *result))

    def mod_of(formula: Formula) -> set:
        return set(bool_mod(BoolTheory((formula,)), m))

    singles = [(i,) for i in range(len(subsets))]
    pairs = list(itertools.product(range(len(subsets)), repeat=2))

    add("valuations are the vertices of the simplex", (k == 2 ** m, f"{k} vertices"))
    distinct = len({frozenset(s) for s in models})
    free_size = bool_lind(BoolTheory(), m).size
    add(
        "formula classes are the faces of the simplex, empty face included",
        (distinct == 2 ** k and free_size == 2 ** k, f"{distinct} classes, free algebra of {free_size}"),
    )
    x1 = X(1)
    add("X1 | !X1 is the whole simplex", (mod_of(Vee(x1, Neg(x1))) == all_points, f"{k} vertices"))
    add("X1 & !X1 is the empty face", (mod_of(Meet(x1, Neg(x1))) == set(), "0 vertices"))
    add(
        "normal forms pick out exactly their valuations",
        _agreement(singles, lambda i: models[i] == set(subsets[i])),
    )
    add(
        "!phi is the complementary face",
        _agreement(singles, lambda i: mod_of(Neg(formulas[i])) == all_points - models[i]),
    )
    add(
        "phi | psi is the union",
        _agreement(pairs, lambda i, j: mod_of(Vee(formulas[i], formulas[j])) == models[i] | models[j]),
    )
    add(
        "phi & psi is the intersection",
        _agreement(pairs, lambda i, j: mod_of(Meet(formulas[i], formulas[j])) == models[i] & models[j]),
    )
    add(
        "phi entails psi iff the faces are included",
        _agreement(
            pairs,
            lambda i, j: (mod_of(Vee(Neg(formulas[i]), formulas[j])) == all_points)
            == (models[i] <= models[j]),
        ),
    )
    add(
        "consistent pairs share a vertex",
        _agreement(
            pairs,
            lambda i, j: bool(bool_mod(BoolTheory.of([formulas[i], formulas[j]]), m))
            == bool(models[i] & models[j]),
        ),
    )
    add(
        "Lindenbaum algebra of {phi} has 2^|Mod| elements",
        _agreement(singles, lambda i: bool_lind(BoolTheory((formulas[i],)), m).size == 2 ** len(models[i])),
    )
    free_iso = iso_check(bool_lind(BoolTheory(), m), powerset_algebra(k)) is not None
    add("the free boolean algebra is the face lattice of the simplex", (free_iso, f"{2 ** k} elements"))
    add(
        "Xi is the ith coordinate function",
        _agreement(
            [(i,) for i in range(1, m + 1)],
            lambda i: mod_of(X(i)) == {p for p in points if p[i - 1] == 1},
        ),
    )
    return rows


def table_correspondence_check(
    which: int, m: int = 1, samples: int = 200, seed: Optional[int] = None
) -> CorrespondenceReport:
    """
    Machine-check the rows of the simplex table (1) or the cube table (2)

    Arity 1 is exhaustive; arity 2 samples pairs on the cube side.

    Raises:
        PreconditionError: If m is outside 1..2 or which is not 1 or 2
    """
    if which not in (1, 2):
        raise PreconditionError(f"Correspondence table must be 1 or 2, got {which}")
    if not 1 <= m <= 2:
        raise PreconditionError(f"Correspondence checks run at arity 1 or 2, got {m}")
    rng = np.random.default_rng(Config.RANDOM_SEED if seed is None else seed)
    rows = _table1_rows(m) if which == 1 else _table2_rows(m, samples, rng)
    report = CorrespondenceReport(which, m, rows)
    logger.info(
        f"Table {which} at m={m}: {sum(r.passed for r in rows)}/{len(rows)} rows pass"
    )
    return report
