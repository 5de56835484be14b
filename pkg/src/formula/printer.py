"""Formula Printer - renders ASTs back into the formula grammar"""
from enum import Enum

from src.formula.ast import (
    Arrow,
    Binary,
    Const0,
    Const1,
    ConstHalf,
    Delta,
    Dpar,
    Flip,
    Formula,
    Join,
    Meet,
    Nabla,
    Neg,
    Unary,
    Var,
    Vee,
)
from src.formula.rewrite import resugar


class Style(str, Enum):
    """Rendering style"""

    CORE = "core"
    SUGARED = "sugared"


# Binding levels, loosest first
_LEVELS = {Arrow: 0, Vee: 1, Join: 2, Meet: 3}
_UNARY_LEVEL = 4
_ATOM_LEVEL = 5

_INFIX = {Arrow: "~>", Vee: "|", Join: "#", Meet: "&"}
_PREFIX = {Neg: "!", Nabla: "N ", Delta: "T ", Flip: "F "}
_CONSTANTS = {Const0: "0", ConstHalf: "h", Const1: "1"}


def _level(node: Formula) -> int:
    if type(node) in _LEVELS:
        return _LEVELS[type(node)]
    if isinstance(node, Unary):
        return _UNARY_LEVEL
    return _ATOM_LEVEL


def _emit(node: Formula) -> str:
    kind = type(node)
    if kind in _CONSTANTS:
        return _CONSTANTS[kind]
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Dpar):
        return f"d({_emit(node.left)},{_emit(node.right)})"
    if isinstance(node, Unary):
        operand = _emit(node.operand)
        if _level(node.operand) < _UNARY_LEVEL:
            operand = f"({operand})"
        return f"{_PREFIX[kind]}{operand}"
    if isinstance(node, Binary):
        level = _LEVELS[kind]
        left, right = _emit(node.left), _emit(node.right)
        if _level(node.left) < level:
            left = f"({left})"
        if _level(node.right) <= level:
            right = f"({right})"
        return f"{left} {_INFIX[kind]} {right}"
    raise TypeError(f"Not a formula node: {node!r}")


def render(formula: Formula, style: Style = Style.CORE) -> str:
    """
    Render a formula as text

    Args:
        formula: Formula to render
        style: CORE prints the tree exactly as built; SUGARED prints its
            resugared presentation (derived connectives restored)

    Returns:
        Text that parses back to the rendered tree
    """
    if Style(style) is Style.SUGARED:
        formula = resugar(formula)
    return _emit(formula)
