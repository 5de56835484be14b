"""Formula AST - immutable syntax trees over the RM, Post and boolean connectives"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterator, Tuple


@dataclass(frozen=True)
class Formula:
    """Base class of every formula node"""

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def rebuild(self, children: Tuple["Formula", ...]) -> "Formula":
        """Same node kind with new children"""
        return self

    @property
    def size(self) -> int:
        """Number of nodes of the tree (shared subterms counted at every occurrence)"""
        sizes: Dict[int, int] = {}
        for node in self.post_order():
            sizes[id(node)] = 1 + sum(sizes[id(child)] for child in node.children())
        return sizes[id(self)]

    def walk(self) -> Iterator["Formula"]:
        """Pre-order traversal visiting each distinct node object once"""
        seen = set()
        stack = [self]
        while stack:
            node = stack.pop()
            if id(node) in seen:
                continue
            seen.add(id(node))
            yield node
            stack.extend(reversed(node.children()))

    def post_order(self) -> Iterator["Formula"]:
        """Children before parents, each distinct node object once"""
        seen = set()
        stack = [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                yield node
                continue
            if id(node) in seen:
                continue
            seen.add(id(node))
            stack.append((node, True))
            stack.extend((child, False) for child in reversed(node.children()))

    def variables(self) -> FrozenSet["Var"]:
        return frozenset(node for node in self.walk() if isinstance(node, Var))

    def max_index(self) -> int:
        """Largest variable index, 0 for closed formulas"""
        return max((var.index for var in self.variables()), default=0)

    def kinds(self) -> FrozenSet[type]:
        return frozenset(type(node) for node in self.walk())


@dataclass(frozen=True)
class Const0(Formula):
    pass


@dataclass(frozen=True)
class ConstHalf(Formula):
    pass


@dataclass(frozen=True)
class Const1(Formula):
    pass


@dataclass(frozen=True)
class Var(Formula):
    name: str
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"Variable index must be positive, got {self.index}")


@dataclass(frozen=True)
class Unary(Formula):
    operand: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.operand,)

    def rebuild(self, children: Tuple[Formula, ...]) -> Formula:
        return type(self)(children[0])


@dataclass(frozen=True)
class Binary(Formula):
    left: Formula
    right: Formula

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)

    def rebuild(self, children: Tuple[Formula, ...]) -> Formula:
        return type(self)(children[0], children[1])


# Core connectives
@dataclass(frozen=True)
class Join(Binary):
    pass


@dataclass(frozen=True)
class Dpar(Binary):
    pass


@dataclass(frozen=True)
class Meet(Binary):
    pass


# Sugar
@dataclass(frozen=True)
class Neg(Unary):
    pass


@dataclass(frozen=True)
class Nabla(Unary):
    pass


@dataclass(frozen=True)
class Delta(Unary):
    pass


@dataclass(frozen=True)
class Flip(Unary):
    pass


@dataclass(frozen=True)
class Vee(Binary):
    pass


@dataclass(frozen=True)
class Arrow(Binary):
    pass


ZERO = Const0()
HALF = ConstHalf()
ONE = Const1()

CORE_KINDS = frozenset({Const0, ConstHalf, Var, Join, Dpar, Meet})
POST_KINDS = frozenset({Const0, ConstHalf, Const1, Var, Neg, Nabla, Vee, Meet})
BOOLEAN_KINDS = frozenset({Const0, Const1, Var, Neg, Vee, Meet})

# JSON / CLI operator names
OP_NAMES: Dict[type, str] = {
    Join: "join",
    Dpar: "dpar",
    Meet: "meet",
    Neg: "neg",
    Nabla: "nabla",
    Delta: "delta",
    Flip: "flip",
    Vee: "vee",
    Arrow: "arrow",
}
OPS_BY_NAME: Dict[str, type] = {name: kind for kind, name in OP_NAMES.items()}


def X(index: int) -> Var:
    """Canonical variable X<index>"""
    return Var(f"X{index}", index)


def is_core(formula: Formula) -> bool:
    return formula.kinds() <= CORE_KINDS


def is_post_formula(formula: Formula) -> bool:
    return formula.kinds() <= POST_KINDS


def is_boolean_formula(formula: Formula) -> bool:
    return formula.kinds() <= BOOLEAN_KINDS


def meet_all(formulas) -> Formula:
    """Left-associated meet chain of a nonempty sequence"""
    formulas = list(formulas)
    result = formulas[0]
    for formula in formulas[1:]:
        result = Meet(result, formula)
    return result


def vee_all(formulas) -> Formula:
    """Left-associated vee chain; the empty chain is 0"""
    formulas = list(formulas)
    if not formulas:
        return ZERO
    result = formulas[0]
    for formula in formulas[1:]:
        result = Vee(result, formula)
    return result
