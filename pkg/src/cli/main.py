"""
Command-line surface

Every command prints a short text result on stdout, or a JSON document with
--json. Exit codes: 0 holds/true/pass, 1 does not hold/false, 2 usage or
input error, 3 internal invariant violation.
"""
import argparse
import json
import logging
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from src.algebra import (
    axiom_set_named,
    check_axioms,
    clone_closure,
    load_algebra,
)
from src.config import Config
from src.exceptions import CubicLogicError, IncompatibleTheoryError, InvariantViolation
from src.faces import Face, FaceOps
from src.formula import (
    Formula,
    Style,
    VariableRegistry,
    parse,
    parse_many,
    render,
    synthesize,
    to_json,
    to_post,
    to_rm,
)
from src.lindenbaum import lindenbaum, table_correspondence_check
from src.semantics import (
    Mode,
    Theory,
    TruthTable,
    Valuation,
    Verdict,
    arrow_formula,
    compatibility,
    entails,
    entails_via_meet,
    evaluate,
    meet_formula,
    reduce_post_to_rm,
    required_arity,
    table,
)
from src.verification import SelfTest

logger = logging.getLogger(__name__)

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_INVARIANT = 0, 1, 2, 3


class Output:
    """Collects the text lines or the JSON document of one command"""

    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.lines: List[str] = []
        self.document: Dict[str, Any] = {}

    def line(self, text: str) -> None:
        self.lines.append(text)

    def update(self, **fields: Any) -> None:
        self.document.update(fields)

    def flush(self, stream=None) -> None:
        stream = stream or sys.stdout
        if self.as_json:
            stream.write(json.dumps(self.document, indent=2, default=str) + "\n")
        elif self.lines:
            stream.write("\n".join(self.lines) + "\n")


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _exit(value: bool) -> int:
    return EXIT_TRUE if value else EXIT_FALSE


def _arity(args: argparse.Namespace) -> Optional[int]:
    local = getattr(args, "m", None)
    return local if local is not None else args.arity


def _first_index(mask: np.ndarray) -> Optional[int]:
    hits = np.flatnonzero(mask)
    return int(hits[0]) if hits.size else None


# Formula commands
def cmd_parse(args, out: Output) -> int:
    registry = VariableRegistry()
    formula = parse(args.formula, registry)
    core, sugared = render(formula), render(formula, Style.SUGARED)
    out.line(f"core: {core}")
    out.line(f"sugared: {sugared}")
    out.update(core=core, sugared=sugared, ast=to_json(formula), variables=registry.index_map)
    return EXIT_TRUE


def cmd_eval(args, out: Output) -> int:
    formula = parse(args.formula)
    valuation = Valuation.parse(args.valuation, _arity(args) if "=" in args.valuation else None)
    value = evaluate(formula, valuation)
    out.line(value.symbol)
    out.update(valuation=valuation.to_json(), value=value.symbol)
    return EXIT_TRUE


def cmd_table(args, out: Output) -> int:
    result = table(parse(args.formula), _arity(args))
    out.line(result.to_text())
    out.update(m=result.m, table=result.word)
    return EXIT_TRUE


def cmd_taut(args, out: Output) -> int:
    formula = parse(args.formula)
    m = _arity(args)
    result = table(formula, m)
    holds = bool(result.half.all())
    out.line(f"tautology: {_bool(holds)}")
    witness = None
    if not holds:
        witness = Valuation(result.m, _first_index(~result.half))
        out.line(f"witness: {witness}")
    out.update(tautology=holds, witness=witness.to_json() if witness else None)
    return _exit(holds)


def cmd_equiv(args, out: Output) -> int:
    first, second = parse_many([args.formula, args.other])
    m = _arity(args)
    m = required_arity(first, second) if m is None else m
    left, right = table(first, m), table(second, m)
    differ = (left.zero != right.zero) | (left.one != right.one)
    index = _first_index(differ)
    out.line(f"equivalent: {_bool(index is None)}")
    witness = None
    if index is not None:
        witness = Valuation(m, index)
        out.line(f"witness: {witness} ({left[index].symbol} vs {right[index].symbol})")
    out.update(equivalent=index is None, witness=witness.to_json() if witness else None)
    return _exit(index is None)


def cmd_translate(args, out: Output) -> int:
    formula = parse(args.formula)
    result = to_post(formula) if args.to == "post" else to_rm(formula)
    text = render(result)
    out.line(text)
    out.update(target=args.to, formula=text, ast=to_json(result))
    return EXIT_TRUE


def cmd_synth(args, out: Output) -> int:
    text = args.table.replace("\\n", "\n")
    target = TruthTable.from_text(text) if text.lstrip().startswith("m=") else TruthTable.from_word(text)
    formula = synthesize(target)
    rendered = render(formula, Style(args.style))
    out.line(rendered)
    out.update(m=target.m, table=target.word, formula=rendered)
    return EXIT_TRUE


def cmd_reduce_post(args, out: Output) -> int:
    reduced = reduce_post_to_rm(parse(args.formula))
    text = render(reduced)
    out.line(text)
    out.update(formula=text, ast=to_json(reduced))
    return EXIT_TRUE


# Consequence commands
def _theory_and_goal(texts: Sequence[str], goal_text: Optional[str] = None):
    formulas = parse_many(list(texts) + ([goal_text] if goal_text is not None else []))
    if goal_text is None:
        return Theory.of(formulas), None
    return Theory(tuple(formulas[:-1])), formulas[-1]


def cmd_compat(args, out: Output) -> int:
    theory, _ = _theory_and_goal(args.theory)
    result = compatibility(theory, _arity(args), strict=args.strict_incompat)
    out.line(f"compatible: {_bool(result.compatible)}")
    if result.clash is not None:
        clash = result.clash
        out.line(f"clash: {clash.valuation} between premises {clash.first + 1} and {clash.second + 1}")
    out.update(**result.to_dict())
    return _exit(result.compatible)


def _reduction_verdict(theory: Theory, goal: Formula, m: Optional[int]) -> Verdict:
    """Entailment through a single tautology check of (meet of premises) ~> goal"""
    m = theory.arity(goal) if m is None else m
    if len(theory) == 0:
        premise = None
    else:
        premise = theory[0]
        for formula in theory.formulas[1:]:
            premise = meet_formula(premise, formula)
    check = goal if premise is None else arrow_formula(premise, goal)
    result = table(check, m)
    failing = _first_index(~result.half)
    if failing is None:
        return Verdict(True)
    return Verdict(False, counterexample=Valuation(m, failing))


def cmd_entails(args, out: Output) -> int:
    theory, goal = _theory_and_goal(args.theory, args.formula)
    m = _arity(args)
    if args.method == "direct":
        verdict = entails(theory, goal, m, strict=args.strict_incompat)
    elif args.method == "meet":
        verdict = entails_via_meet(theory, goal, m)
    else:
        if not compatibility(theory, m).compatible:
            raise IncompatibleTheoryError("Reduction needs a compatible premise set; use --method direct")
        verdict = _reduction_verdict(theory, goal, m)

    out.line(f"entails: {_bool(verdict.holds)}")
    if verdict.mode is Mode.INCOMPATIBLE:
        clash = verdict.clash
        out.line(
            f"premises incompatible: clash at {clash.valuation} between premises "
            f"{clash.first + 1} and {clash.second + 1}"
        )
    elif verdict.counterexample is not None:
        out.line(f"witness: {verdict.counterexample}")
    out.update(method=args.method, **verdict.to_dict())
    return _exit(verdict.holds)


# Faces
def _faces(words: Sequence[str]) -> List[Face]:
    return [Face.from_word(w) for w in words]


def _face_value(out: Output, face: Optional[Face]) -> int:
    if face is None:
        out.line("undefined")
        out.update(face=None)
        return EXIT_FALSE
    out.line(face.word)
    out.update(face=face.word, dimension=face.dimension)
    return EXIT_TRUE


def _face_relation(out: Output, name: str, value: bool) -> int:
    out.line(f"{name}: {_bool(value)}")
    out.update(**{name: value})
    return _exit(value)


FACE_COMMANDS: Dict[str, Callable[[Output, List[Face]], int]] = {
    "join": lambda out, f: _face_value(out, FaceOps.join(f[0], f[1])),
    "meet": lambda out, f: _face_value(out, FaceOps.intersect(f[0], f[1])),
    "antipodal": lambda out, f: _face_value(out, FaceOps.antipodal(f[0], f[1])),
    "dpar": lambda out, f: _face_value(out, FaceOps.dpar(f[0], f[1])),
    "wedge": lambda out, f: _face_value(out, FaceOps.wedge(f[0], f[1])),
    "subface": lambda out, f: _face_relation(out, "subface", FaceOps.is_subface(f[0], f[1])),
    "compatible": lambda out, f: _face_relation(out, "compatible", FaceOps.compatible_faces(f[0], f[1])),
    "sharper": lambda out, f: _face_relation(out, "sharper", FaceOps.sharper_face(f[0], f[1])),
}


def cmd_faces(args, out: Output) -> int:
    if args.operation == "farthest":
        if len(args.faces) != 1:
            raise ValueError("faces farthest takes exactly one face")
        vertex = FaceOps.farthest_vertex(Face.from_word(args.faces[0]))
        out.line(str(vertex))
        out.update(vertex=list(vertex.coordinates))
        return EXIT_TRUE
    if len(args.faces) != 2:
        raise ValueError(f"faces {args.operation} takes exactly two faces")
    return FACE_COMMANDS[args.operation](out, _faces(args.faces))


# Algebra
def cmd_axioms(args, out: Output) -> int:
    algebra = load_algebra(args.algebra)
    report = check_axioms(algebra, axiom_set_named(args.set))
    if report.passed:
        out.line(f"{algebra.name} satisfies {args.set}: true ({report.checked} assignments)")
    else:
        out.line(f"{algebra.name} satisfies {args.set}: false")
        out.line(f"failure: {report.failure.describe(algebra)}")
    out.update(**report.to_dict())
    return _exit(report.passed)


def cmd_clone(args, out: Output) -> int:
    generators = [g.strip() for g in args.generators.split(",") if g.strip()]
    clone = clone_closure(generators)
    member = clone.contains(args.query)
    out.line(f"{args.query} in clone: {_bool(member)}")
    out.line(f"clone size: {clone.size} binary operations after {clone.rounds} rounds")
    out.update(generators=generators, query=args.query, member=member, size=clone.size, rounds=clone.rounds)
    return _exit(member)


# Lindenbaum
def cmd_lind(args, out: Output) -> int:
    theory, _ = _theory_and_goal(args.theory)
    result = lindenbaum(theory, _arity(args))
    out.line(f"|Mod| = {result.dimension}")
    for valuation in result.mod.as_valuations():
        out.line(f"  {valuation}")
    out.line(f"elements: {result.algebra.size}")
    out.line(f"certification: {result.certification}")
    out.update(**result.to_dict())
    return EXIT_TRUE


def cmd_tables(args, out: Output) -> int:
    report = table_correspondence_check(args.check, _arity(args) or 1, args.samples, args.seed)
    for line in report.lines():
        out.line(line)
    out.update(**report.to_dict())
    return _exit(report.passed)


def cmd_selftest(args, out: Output) -> int:
    runner = SelfTest(
        seed=args.seed,
        random_pairs=args.pairs,
        post_formulas=args.post_formulas,
        compactness_trials=args.compactness_trials,
    )
    report = runner.run_all(args.only)
    frame = report.to_frame()
    out.line(frame.to_string(index=False))
    out.line(f"selftest: {'PASS' if report.passed else 'FAIL'}")
    out.update(**report.to_dict())
    return report.exit_code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubic", description="Three-valued cubic logic: formulas, faces, algebras"
    )
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text")
    parser.add_argument("--arity", type=int, default=None, help="Arity m used by every command")
    parser.add_argument("--log-level", default=None, help="Logging level (default CUBIC_LOG_LEVEL)")
    parser.add_argument("--seed", type=int, default=None, help="Seed for sampled checks")
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help_text: str, arity: bool = False) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        if arity:
            sub.add_argument("-m", type=int, default=None, help="Arity (overrides --arity)")
        return sub

    sub = command("parse", cmd_parse, "Parse and re-render a formula")
    sub.add_argument("-f", "--formula", required=True)

    sub = command("eval", cmd_eval, "Value of a formula at one valuation", arity=True)
    sub.add_argument("-f", "--formula", required=True)
    sub.add_argument("-v", "--valuation", default="", help='Trit word ("0h1") or "X1=0 X2=h"')

    sub = command("table", cmd_table, "Truth table of a formula", arity=True)
    sub.add_argument("-f", "--formula", required=True)

    sub = command("taut", cmd_taut, "Is the formula constantly h", arity=True)
    sub.add_argument("-f", "--formula", required=True)

    sub = command("equiv", cmd_equiv, "Do two formulas have the same table", arity=True)
    sub.add_argument("-f", "--formula", required=True)
    sub.add_argument("-g", "--other", required=True)

    sub = command("compat", cmd_compat, "Is the premise set compatible", arity=True)
    sub.add_argument("-t", "--theory", nargs="+", required=True)
    sub.add_argument("--strict-incompat", action="store_true", help="Values sum to 1, h clashing with itself")

    sub = command("entails", cmd_entails, "Do the premises entail the goal", arity=True)
    sub.add_argument("-t", "--theory", nargs="*", default=[])
    sub.add_argument("-f", "--formula", required=True)
    sub.add_argument("--method", choices=["direct", "meet", "reduction"], default="direct")
    sub.add_argument("--strict-incompat", action="store_true")

    sub = command("translate", cmd_translate, "Translate between the RM and Post signatures")
    sub.add_argument("--to", choices=["post", "rm"], required=True)
    sub.add_argument("-f", "--formula", required=True)

    sub = command("synth", cmd_synth, "Formula with a given truth table")
    sub.add_argument("--table", required=True, help='Trit word of length 3^m, or "m=<k>\\n<word>"')
    sub.add_argument("--style", choices=[s.value for s in Style], default=Style.CORE.value)

    sub = command("reduce-post", cmd_reduce_post, "RM formula tautological iff the Post formula is")
    sub.add_argument("-f", "--formula", required=True)

    sub = command("faces", cmd_faces, "Operations on faces of the n-cube")
    sub.add_argument("operation", choices=sorted(list(FACE_COMMANDS) + ["farthest"]))
    sub.add_argument("faces", nargs="+", help="Face words over 0, h, 1")

    sub = command("axioms", cmd_axioms, "Check an algebra against an axiom set")
    sub.add_argument("--set", choices=["kleene", "post", "rm"], required=True)
    sub.add_argument("--algebra", required=True, help="Built-in name (zeta_rm, zeta_post, F<n>, B<n>) or file")

    sub = command("clone", cmd_clone, "Membership in the clone of binary operations")
    sub.add_argument("--generators", required=True, help="Comma-separated operation names")
    sub.add_argument("--query", required=True)

    sub = command("lind", cmd_lind, "Lindenbaum algebra of a theory", arity=True)
    sub.add_argument("-t", "--theory", nargs="*", default=[])

    sub = command("tables", cmd_tables, "Check a formula/face or boolean/simplex correspondence table", arity=True)
    sub.add_argument("--check", type=int, choices=[1, 2], required=True)
    sub.add_argument("--samples", type=int, default=200)

    sub = command("selftest", cmd_selftest, "Run every invariant sweep")
    sub.add_argument("--only", nargs="+", choices=SelfTest.CHECKS, default=None)
    sub.add_argument("--pairs", type=int, default=None, help="Random m=2 consequence pairs")
    sub.add_argument("--post-formulas", type=int, default=None)
    sub.add_argument("--compactness-trials", type=int, default=None)
    return parser


def configure_logging(level: Optional[str]) -> None:
    logging.basicConfig(
        level=(level or Config.LOG_LEVEL).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    out = Output(args.json)

    try:
        code = args.handler(args, out)
    except InvariantViolation as e:
        logger.error(f"Invariant violation in {args.command}: {e}")
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    except (CubicLogicError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
