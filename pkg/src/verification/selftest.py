"""Self-test - exhaustive and sampled sweeps over every identity and proposition at desk scale"""
import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np
import pandas as pd

from src.algebra import (
    boolean_elements,
    check_axioms,
    clone_closure,
    derive_post,
    derive_rm,
    equation_report,
    faces_algebra,
    free_rm,
    kleene_axioms,
    post_axioms,
    refute_case_shapes,
    rm_axioms,
    round_trip_post,
    round_trip_rm,
    zeta_post,
    zeta_rm,
)
from src.algebra.identities import IDENTITIES
from src.config import Config
from src.faces import Face, FaceOps, FaceOrder, all_faces
from src.formula import X, enumerate_formulas, random_formula, representatives, synthesize
from src.formula.ast import Arrow, Meet, Nabla, Neg
from src.formula.printer import render
from src.lindenbaum import congruence_check, lindenbaum, table_correspondence_check
from src.semantics import (
    Theory,
    TruthTable,
    compactness_core,
    compatibility,
    entails,
    entails_via_meet,
    entails_via_reduction,
    is_tautology,
    nonmonotonicity_witness,
    post_tautology,
    reduce_post_to_rm,
    table,
)
from src.trits import TritOps

logger = logging.getLogger(__name__)

PASS, FAIL, REPORTED = "PASS", "FAIL", "REPORTED"

# The three tables as printed, row x, column y; "u" marks an undefined cell
PRINTED_TABLES = {
    "join": (("0", "h", "h"), ("h", "h", "h"), ("h", "h", "1")),
    "dpar": (("0", "h", "0"), ("1", "h", "0"), ("1", "h", "1")),
    "meet_partial": (("0", "0", "u"), ("0", "h", "1"), ("u", "1", "1")),
}

EXPECTED_LITERAL_MISMATCHES = {("h", "0"), ("1", "0")}


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str
    cases: int
    detail: str = ""
    seconds: float = 0.0


@dataclass
class SelfTestReport:
    results: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.results)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 3

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "check": r.name,
                    "status": r.status,
                    "cases": r.cases,
                    "seconds": round(r.seconds, 2),
                    "detail": r.detail,
                }
                for r in self.results
            ],
            columns=["check", "status", "cases", "seconds", "detail"],
        )

    def to_dict(self) -> Dict[str, Any]:
        return {"passed": self.passed, "checks": self.to_frame().to_dict(orient="records")}


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


class SelfTest:
    """Runs the named checks; sample sizes default to the configured values"""

    CHECKS = (
        "table_fidelity",
        "equation_suite",
        "join_term_discrepancy",
        "nondefinability",
        "consequence_agreement",
        "order_coincidence",
        "conp_reduction",
        "representation_counts",
        "compactness",
        "consequence_laws",
        "axiom_suite",
        "face_transport",
        "table_correspondence",
    )

    def __init__(
        self,
        seed: Optional[int] = None,
        random_pairs: Optional[int] = None,
        post_formulas: Optional[int] = None,
        compactness_trials: Optional[int] = None,
        max_face_dim: Optional[int] = None,
    ):
        self.seed = Config.RANDOM_SEED if seed is None else seed
        self.random_pairs = Config.RANDOM_PAIRS if random_pairs is None else random_pairs
        self.post_formulas = Config.RANDOM_POST_FORMULAS if post_formulas is None else post_formulas
        self.compactness_trials = (
            Config.COMPACTNESS_TRIALS if compactness_trials is None else compactness_trials
        )
        self.max_face_dim = Config.MAX_FACE_DIM if max_face_dim is None else max_face_dim
        self._synthesized: Dict[bytes, Any] = {}

    def _rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)

    def _formula_for(self, t: TruthTable):
        key = t.key()
        if key not in self._synthesized:
            self._synthesized[key] = synthesize(t)
        return self._synthesized[key]

    # Individual checks
    def table_fidelity(self) -> CheckResult:
        grids = TritOps.tables_as_grids()
        bad = [
            f"{name}[{x}][{y}]"
            for name, printed in PRINTED_TABLES.items()
            for x in range(3)
            for y in range(3)
            if grids[name][x][y] != printed[x][y]
        ]
        return CheckResult("table_fidelity", _status(not bad), 27, ", ".join(bad) or "27 cells match")

    def equation_suite(self) -> CheckResult:
        results = [equation_report(i.name) for i in IDENTITIES if not i.expected_to_fail]
        failed = [r.identity.name for r in results if not r.passed]
        cells = sum(r.cells for r in results)
        detail = f"failing: {', '.join(failed)}" if failed else f"{len(results)} identities hold"
        return CheckResult("equation_suite", _status(not failed), cells, detail)

    def join_term_discrepancy(self) -> CheckResult:
        result = equation_report("join_post_literal")
        cells = set(result.mismatch_cells())
        listed = ", ".join(f"({x},{y})" for x, y in sorted(cells))
        if result.passed or cells != EXPECTED_LITERAL_MISMATCHES:
            return CheckResult("join_term_discrepancy", FAIL, result.cells, f"mismatch cells: {listed or 'none'}")
        return CheckResult(
            "join_term_discrepancy", REPORTED, result.cells, f"printed join term differs at {listed}"
        )

    def nondefinability(self) -> CheckResult:
        clone = clone_closure(["zero", "half", "join", "dpar"])
        shapes = refute_case_shapes()
        ok = (
            not clone.contains("meet")
            and clone.contains("neg")
            and clone.contains("pi1")
            and shapes["join"] == 0
            and shapes["dpar"] == 0
        )
        detail = (
            f"{clone.size} binary operations, meet {'present' if clone.contains('meet') else 'absent'}; "
            f"shape matches join={shapes['join']} dpar={shapes['dpar']} over {shapes['pairs']} pairs"
        )
        return CheckResult("nondefinability", _status(ok), clone.size + 2 * shapes["pairs"], detail)

    def _agree(self, first: TruthTable, second: TruthTable, m: int) -> bool:
        alpha, beta = self._formula_for(first), self._formula_for(second)
        theory = Theory((alpha,))
        direct = entails(theory, beta, m).holds
        via_meet = entails_via_meet(theory, beta, m).holds
        via_reduction = entails_via_reduction(alpha, beta, m)
        return direct == via_meet == via_reduction == first.below(second)

    def consequence_agreement(self) -> CheckResult:
        free = free_rm(1)
        tables = [free.table_at(i) for i in range(free.size)]
        disagreements = sum(1 for a, b in itertools.product(tables, repeat=2) if not self._agree(a, b, 1))
        rng = self._rng()
        for _ in range(self.random_pairs):
            codes = rng.integers(0, 3, size=(2, 9))
            a, b = TruthTable.from_codes(2, codes[0]), TruthTable.from_codes(2, codes[1])
            disagreements += not self._agree(a, b, 2)
        cases = len(tables) ** 2 + self.random_pairs
        return CheckResult(
            "consequence_agreement", _status(disagreements == 0), cases, f"{disagreements} disagreements"
        )

    def order_coincidence(self) -> CheckResult:
        problems = []
        cases = 0
        for n in range(1, self.max_face_dim + 1):
            subface = FaceOrder.order_matrix(n, "subface")
            sharper = FaceOrder.order_matrix(n, "sharper")
            cases += subface.size
            if not np.array_equal(subface, sharper):
                problems.append(f"n={n}: orders differ")
            if not FaceOrder.is_partial_order(sharper):
                problems.append(f"n={n}: sharpening is not a partial order")
            faces = all_faces(n)
            minimal = set(FaceOrder.minimal_elements(sharper))
            vertices = {i for i, f in enumerate(faces) if f.is_vertex}
            booleans = set(boolean_elements(faces_algebra(n))) if n <= Config.MAX_FACE_DIM else vertices
            if not minimal == vertices == booleans:
                problems.append(f"n={n}: minimal elements are not the vertices")
        return CheckResult("order_coincidence", _status(not problems), cases, "; ".join(problems) or f"n <= {self.max_face_dim}")

    def conp_reduction(self) -> CheckResult:
        formulas = list(enumerate_formulas(5, 2, "post"))
        rng = self._rng()
        formulas += [random_formula(rng, int(rng.integers(1, 13)), 2, "post") for _ in range(self.post_formulas)]
        bad = [f for f in formulas if post_tautology(f, 2) != is_tautology(reduce_post_to_rm(f), 2)]
        detail = f"{len(bad)} disagreements" + (f", e.g. {render(bad[0])}" if bad else "")
        return CheckResult("conp_reduction", _status(not bad), len(formulas), detail)

    def representation_counts(self) -> CheckResult:
        free = free_rm(1)
        generated = free.generated_by([TruthTable.coordinate(1, 1)])
        whole_theory = lindenbaum(Theory(()), 1)
        single = lindenbaum(Theory((X(1),)), 1)
        empty = lindenbaum(Theory((Nabla(X(1)),)), 1)
        congruence = congruence_check(Theory((X(1),)), 2, pairs=20, seed=self.seed)
        checks = {
            "free_rm(1) has 27 elements": free.size == 27,
            "one generator reaches all 27": len(generated) == 27,
            "term closure reaches 27 tables": len(representatives(1)) == 27,
            "free_rm(2) has 19683 elements": free_rm(2).size == 19683,
            "lind(empty, 1) is F_3": whole_theory.algebra.size == 27 and whole_theory.certification == "isomorphism",
            "X1 is the face 0h1 in lind(empty, 1)": whole_theory.algebra.labels[
                whole_theory.element_of(TruthTable.coordinate(1, 1))
            ] == "0h1",
            "lind({X1}, 1) is F_1": single.algebra.size == 3 and single.certification == "isomorphism",
            "lind({N X1}, 1) is trivial": empty.algebra.size == 1,
            "restriction equality is a congruence": congruence.passed,
        }
        failed = [name for name, ok in checks.items() if not ok]
        return CheckResult(
            "representation_counts", _status(not failed), len(checks), "; ".join(failed) or "all counts match"
        )

    def _compatible_instance(self, rng: np.random.Generator):
        m = int(rng.integers(1, 3))
        cells = 3 ** m
        base = rng.choice([0, 2], size=cells)
        count = int(rng.integers(1, 21))
        premises = []
        for _ in range(count):
            codes = np.where(rng.random(cells) < 0.5, base, 1)
            premises.append(TruthTable.from_codes(m, codes))
        goal_codes = np.ones(cells, dtype=np.int64)
        for v in range(cells):
            options = [1] + sorted({int(p.codes()[v]) for p in premises} - {1})
            goal_codes[v] = options[int(rng.integers(len(options)))]
        goal = TruthTable.from_codes(m, goal_codes)
        theory = Theory.of(self._formula_for(p) for p in premises)
        return m, theory, self._formula_for(goal)

    def compactness(self) -> CheckResult:
        rng = self._rng()
        failures = 0
        kept = 0
        for _ in range(self.compactness_trials):
            m, theory, goal = self._compatible_instance(rng)
            core = compactness_core(theory, goal, m)
            kept += len(core)
            if not set(core) <= set(theory) or not entails(core, goal, m).holds:
                failures += 1
        detail = f"{failures} failures, {kept} premises kept in total"
        return CheckResult("compactness", _status(failures == 0), self.compactness_trials, detail)

    def consequence_laws(self) -> CheckResult:
        free = free_rm(1)
        formulas = [self._formula_for(free.table_at(i)) for i in range(free.size)]
        problems = []
        for phi in formulas:
            t = table(phi, 1)
            if compatibility(Theory.of([phi, Neg(phi)]), 1).compatible != is_tautology(phi, 1):
                problems.append(f"negation pair at {t.word}")
            incompatible = not compatibility(Theory.of([phi, Meet(phi, Neg(phi))]), 1).compatible
            if incompatible != bool(t.one.any()):
                problems.append(f"contradiction pair at {t.word}")
        tautologies = {id(phi): is_tautology(phi, 1) for phi in formulas}
        for alpha, beta in itertools.product(formulas, repeat=2):
            if tautologies[id(alpha)] and is_tautology(Arrow(alpha, beta), 1) and not tautologies[id(beta)]:
                problems.append("modus ponens")
        alpha, beta, gamma = nonmonotonicity_witness(1)
        if not entails(Theory((alpha,)), gamma, 1).holds or entails(Theory((Meet(alpha, beta),)), gamma, 1).holds:
            problems.append("nonmonotonicity witness")
        cases = 2 * len(formulas) + len(formulas) ** 2 + 1
        detail = "; ".join(problems[:5]) or (
            f"witness ({render(alpha)}, {render(beta)}, {render(gamma)})"
        )
        return CheckResult("consequence_laws", _status(not problems), cases, detail)

    def axiom_suite(self) -> CheckResult:
        post, rm = zeta_post(), zeta_rm()
        corrupted = post.with_table("meet", _corrupt(post.binary["meet"], 1, 2, 0))
        f2 = faces_algebra(2)
        checks: Dict[str, Callable[[], bool]] = {
            "zeta_post is a Kleene algebra": lambda: check_axioms(post, kleene_axioms()).passed,
            "zeta_post is a Post algebra": lambda: check_axioms(post, post_axioms()).passed,
            "zeta_rm satisfies the RM equations": lambda: check_axioms(rm, rm_axioms()).passed,
            "F_2 satisfies the RM equations": lambda: check_axioms(f2, rm_axioms()).passed,
            "corrupted meet is caught": lambda: not check_axioms(corrupted, post_axioms()).passed,
            "derive_post(zeta_rm) = zeta_post": lambda: derive_post(rm).same_tables(post),
            "derive_rm(zeta_post) = zeta_rm": lambda: derive_rm(post).same_tables(rm),
            "round trip on zeta_rm": lambda: round_trip_rm(rm),
            "round trip on zeta_post": lambda: round_trip_post(post),
            "round trip on F_2": lambda: round_trip_rm(f2),
        }
        failed = [name for name, check in checks.items() if not check()]
        return CheckResult("axiom_suite", _status(not failed), len(checks), "; ".join(failed) or "all hold")

    def face_transport(self) -> CheckResult:
        problems: List[str] = []
        cases = 0
        for n in range(1, self.max_face_dim + 1):
            faces = all_faces(n)
            for a, b in itertools.product(faces, repeat=2):
                cases += 1
                problems.extend(_transport_problems(a, b, n <= 3))
                if len(problems) > 10:
                    break
        detail = "; ".join(problems[:5]) or f"all pairs for n <= {self.max_face_dim}"
        return CheckResult("face_transport", _status(not problems), cases, detail)

    def table_correspondence(self) -> CheckResult:
        reports = [
            table_correspondence_check(1, 1, seed=self.seed),
            table_correspondence_check(1, 2, seed=self.seed),
            table_correspondence_check(2, 1, seed=self.seed),
        ]
        failing = [f"table {r.which} m={r.m} " + line for r in reports for line in r.lines() if "FAIL" in line]
        rows = sum(len(r.rows) for r in reports)
        return CheckResult("table_correspondence", _status(not failing), rows, "; ".join(failing) or f"{rows} rows pass")

    # Driver
    def run(self, name: str) -> CheckResult:
        if name not in self.CHECKS:
            raise ValueError(f"Unknown check {name!r}; choose from {', '.join(self.CHECKS)}")
        started = time.perf_counter()
        result = getattr(self, name)()
        elapsed = time.perf_counter() - started
        result = CheckResult(result.name, result.status, result.cases, result.detail, elapsed)
        log = logger.error if result.status == FAIL else logger.info
        log(f"{name}: {result.status} ({result.cases} cases, {elapsed:.1f}s) {result.detail}")
        return result

    def run_all(self, only: Optional[List[str]] = None) -> SelfTestReport:
        names = list(only) if only else list(self.CHECKS)
        return SelfTestReport([self.run(name) for name in names])


def _corrupt(table: np.ndarray, x: int, y: int, value: int) -> np.ndarray:
    corrupted = table.copy()
    corrupted[x, y] = value
    return corrupted


def _transport_problems(a: Face, b: Face, small: bool) -> List[str]:
    """Face operations against the pointwise trit operations for one pair"""
    problems = []
    label = f"{a.word},{b.word}"
    pairs = list(zip(a.trits, b.trits))

    if FaceOps.join(a, b).trits != tuple(TritOps.join(x, y) for x, y in pairs):
        problems.append(f"join {label}")
    if FaceOps.dpar(a, b).trits != tuple(TritOps.dpar(x, y) for x, y in pairs):
        problems.append(f"dpar {label}")
    if FaceOps.wedge(a, b).trits != tuple(TritOps.meet(x, y) for x, y in pairs):
        problems.append(f"wedge {label}")

    meet = FaceOps.intersect(a, b)
    pointwise = [TritOps.meet_partial(x, y) for x, y in pairs]
    if (meet is None) != (None in pointwise):
        problems.append(f"intersection definedness {label}")
    elif meet is not None:
        if meet.trits != tuple(pointwise):
            problems.append(f"intersection {label}")
        if FaceOps.cap_curly(a, b) != meet:
            problems.append(f"cap_curly {label}")

    if FaceOps.contains(b, a) and FaceOps.antipodal(b, FaceOps.antipodal(b, a)) != a:
        problems.append(f"antipodal involution {label}")

    if small:
        readings = FaceOps.inclusion_characterizations(a, b)
        if len(set(readings.values())) != 1:
            problems.append(f"inclusion readings {label}: {readings}")
        if FaceOps.contains(b, a):
            reflected = FaceOps.reflect_vertices(b, a)
            expected = {v.coordinates for v in FaceOps.antipodal(b, a).vertices()}
            if reflected != expected:
                problems.append(f"reflection {label}")
    return problems


def run_all(
    seed: Optional[int] = None, only: Optional[List[str]] = None, **sizes: Optional[int]
) -> SelfTestReport:
    """Run the checks with the configured sample sizes (overridable by keyword)"""
    return SelfTest(seed=seed, **sizes).run_all(only)
