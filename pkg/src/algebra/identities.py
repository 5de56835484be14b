"""Identity catalogue - named identities on {0, h, 1} checked cell by cell"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Union

import pandas as pd

from src.formula.ast import (
    HALF,
    ONE,
    ZERO,
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
from src.formula.rewrite import desugar, printed_join_term, dpar_post_term
from src.semantics.consequence import meet_term
from src.semantics.evaluator import evaluate
from src.semantics.valuation import Valuation
from src.trits import Trit, TritOps

logger = logging.getLogger(__name__)

Side = Union[Formula, Callable[..., Optional[Trit]]]


def _from_fraction(value: Fraction) -> Trit:
    return Trit(int(value * 2))


def _numeric(function: Callable[..., Fraction]) -> Callable[..., Trit]:
    def side(*trits: Trit) -> Trit:
        return _from_fraction(function(*(t.fraction for t in trits)))

    return side


def _partial_fold(*values: Trit) -> Optional[Trit]:
    result: Optional[Trit] = Trit.HALF
    for value in values:
        result = None if result is None else TritOps.meet_partial(result, value)
    return result


def _compatible(x: Trit, y: Trit) -> bool:
    return TritOps.compatible(x, y)


x, y = X(1), X(2)


@dataclass(frozen=True)
class Identity:
    """lhs = rhs over every assignment of `arity` trits satisfying the domain filter"""

    name: str
    description: str
    arity: int
    lhs: Side
    rhs: Side
    domain: Optional[Callable[..., bool]] = None
    expected_to_fail: bool = False


def _cap_formula(a: Formula, b: Formula) -> Formula:
    return Vee(
        Meet(Meet(HALF, Nabla(Meet(a, Neg(a)))), Nabla(Meet(b, Neg(b)))),
        Neg(Nabla(Meet(Neg(a), Neg(b)))),
    )


IDENTITIES: List[Identity] = [
    Identity("neg_definition", "!x = 1 - x", 1, Neg(x), _numeric(lambda a: 1 - a)),
    Identity("nabla_definition", "N x = min(1, 2x)", 1, Nabla(x), _numeric(lambda a: min(Fraction(1), 2 * a))),
    Identity("delta_definition", "T x = max(0, 2x - 1)", 1, Delta(x), _numeric(lambda a: max(Fraction(0), 2 * a - 1))),
    Identity("meet_definition", "x & y = min(x, y)", 2, Meet(x, y), _numeric(min)),
    Identity("vee_definition", "x | y = max(x, y)", 2, Vee(x, y), _numeric(max)),
    Identity("delta_from_nabla", "T x = !N !x", 1, Delta(x), Neg(Nabla(Neg(x)))),
    Identity("dpar_post_term", "d(x,y) as a Post term", 2, Dpar(x, y), dpar_post_term()),
    Identity("one_as_dpar", "1 = d(h,0)", 0, ONE, Dpar(HALF, ZERO)),
    Identity("neg_as_dpar", "!x = d(h,x)", 1, Neg(x), Dpar(HALF, x)),
    Identity("nabla_as_dpar", "N x = d(x,0)", 1, Nabla(x), Dpar(x, ZERO)),
    Identity("vee_as_dpar", "x | y = d(h, d(h,x) & d(h,y))", 2, Vee(x, y), desugar(Vee(x, y))),
    Identity(
        "wedge",
        "x & y = (0 # x) meet (0 # y) meet (x # y)",
        2,
        Meet(x, y),
        lambda a, b: _partial_fold(
            TritOps.join(Trit.ZERO, a), TritOps.join(Trit.ZERO, b), TritOps.join(a, b)
        ),
    ),
    Identity(
        "cap_curly",
        "x meet y = (h & N(x & !x) & N(y & !y)) | !N(!x & !y) on compatible pairs",
        2,
        TritOps.meet_partial,
        _cap_formula(x, y),
        domain=_compatible,
    ),
    Identity(
        "meet_term",
        "x meet y = !N(!x & !y) | (h & N(x & !x) & N(y & !y)) on compatible pairs",
        2,
        TritOps.meet_partial,
        meet_term(x, y),
        domain=_compatible,
    ),
    Identity("flip_term", "F x = d(x,0) # d(d(0,x),0)", 1, Flip(x), Join(Dpar(x, ZERO), Dpar(Dpar(ZERO, x), ZERO))),
    Identity(
        "flip_values",
        "flip(0) = 0, flip(h) = 1, flip(1) = h",
        1,
        Flip(x),
        lambda a: {Trit.ZERO: Trit.ZERO, Trit.HALF: Trit.ONE, Trit.ONE: Trit.HALF}[a],
    ),
    Identity("nabla_meet", "N(x & y) = N x & N y", 2, Nabla(Meet(x, y)), Meet(Nabla(x), Nabla(y))),
    Identity("nabla_idempotent", "N N x = N x", 1, Nabla(Nabla(x)), Nabla(x)),
    Identity("delta_idempotent", "T T x = T x", 1, Delta(Delta(x)), Delta(x)),
    Identity("dpar_half", "d(x,h) = h", 1, Dpar(x, HALF), HALF),
    Identity("join_commutative", "x # y = y # x", 2, Join(x, y), Join(y, x)),
    Identity("join_idempotent", "x # x = x", 1, Join(x, x), x),
    Identity("join_associative", "(x # y) # z = x # (y # z)", 3, Join(Join(x, y), X(3)), Join(x, Join(y, X(3)))),
    Identity(
        "join_post_literal",
        "x # y = (!N y & N y & h) | (T y & (h | T x)) | d(0,y), as printed",
        2,
        Join(x, y),
        printed_join_term(),
        expected_to_fail=True,
    ),
]

IDENTITIES_BY_NAME: Dict[str, Identity] = {identity.name: identity for identity in IDENTITIES}


@dataclass
class IdentityResult:
    identity: Identity
    cells: int
    mismatches: pd.DataFrame

    @property
    def passed(self) -> bool:
        return self.mismatches.empty

    @property
    def status(self) -> str:
        if self.passed:
            return "PASS"
        return "REPORTED" if self.identity.expected_to_fail else "FAIL"

    def mismatch_cells(self) -> List[tuple]:
        columns = [f"X{i}" for i in range(1, self.identity.arity + 1)]
        return [tuple(row) for row in self.mismatches[columns].itertuples(index=False)]


def _side_value(side: Side, trits: Sequence[Trit]) -> Optional[Trit]:
    if isinstance(side, Formula):
        return evaluate(side, Valuation.from_digits(trits))
    return side(*trits)


def _symbol(value: Optional[Trit]) -> str:
    return "u" if value is None else value.symbol


def equation_report(name: str) -> IdentityResult:
    """
    Check one named identity exhaustively on {0, h, 1}

    Returns:
        IdentityResult whose mismatches frame has columns X1..Xk, lhs, rhs
        (symbols, "u" for undefined)
    """
    try:
        identity = IDENTITIES_BY_NAME[name]
    except KeyError:
        raise ValueError(f"Unknown identity {name!r}") from None

    rows, cells = [], 0
    for valuation in Valuation.all(identity.arity):
        trits = valuation.digits
        if identity.domain is not None and not identity.domain(*trits):
            continue
        cells += 1
        left, right = _side_value(identity.lhs, trits), _side_value(identity.rhs, trits)
        if left != right or left is None:
            rows.append([t.symbol for t in trits] + [_symbol(left), _symbol(right)])

    columns = [f"X{i}" for i in range(1, identity.arity + 1)] + ["lhs", "rhs"]
    result = IdentityResult(identity, cells, pd.DataFrame(rows, columns=columns))
    if result.status == "REPORTED":
        logger.warning(f"Identity {name} fails on {len(rows)} of {cells} cells, as expected")
    elif not result.passed:
        logger.error(f"Identity {name} fails on {len(rows)} of {cells} cells")
    return result


def equation_suite() -> List[IdentityResult]:
    return [equation_report(identity.name) for identity in IDENTITIES]


def mismatch_grid(result: IdentityResult) -> pd.DataFrame:
    """3x3 grid for a binary identity: '.' where both sides agree, 'lhs/rhs' where not"""
    if result.identity.arity != 2:
        raise ValueError("Mismatch grids are drawn for binary identities")
    symbols = [t.symbol for t in Trit]
    grid = pd.DataFrame(".", index=pd.Index(symbols, name="X1"), columns=pd.Index(symbols, name="X2"))
    for row in result.mismatches.itertuples(index=False):
        grid.loc[row.X1, row.X2] = f"{row.lhs}/{row.rhs}"
    return grid
