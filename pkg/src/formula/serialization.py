"""Formula JSON codec - {"op": name, "args": [...]} nodes with var and const leaves"""
from typing import Any, Dict, Optional

from src.exceptions import FormulaSyntaxError
from src.formula.ast import (
    HALF,
    ONE,
    OP_NAMES,
    OPS_BY_NAME,
    ZERO,
    Const0,
    Const1,
    ConstHalf,
    Formula,
    Unary,
    Var,
)
from src.formula.parser import VariableRegistry

_CONST_NAMES = {Const0: "0", ConstHalf: "h", Const1: "1"}
_CONSTS_BY_NAME = {"0": ZERO, "h": HALF, "1/2": HALF, "1": ONE}


def to_json(formula: Formula) -> Dict[str, Any]:
    """Encode a formula as nested JSON-ready dictionaries"""
    kind = type(formula)
    if kind in _CONST_NAMES:
        return {"const": _CONST_NAMES[kind]}
    if isinstance(formula, Var):
        return {"var": formula.name}
    return {"op": OP_NAMES[kind], "args": [to_json(child) for child in formula.children()]}


def _names(obj: Any, found: list) -> None:
    if isinstance(obj, dict):
        if "var" in obj:
            found.append(obj["var"])
        for arg in obj.get("args", []):
            _names(arg, found)


def from_json(obj: Dict[str, Any], registry: Optional[VariableRegistry] = None) -> Formula:
    """
    Decode a JSON formula

    Args:
        obj: Encoded formula
        registry: Variable registry; names are indexed like parsed identifiers

    Raises:
        FormulaSyntaxError: If the object does not follow the schema
    """
    registry = registry if registry is not None else VariableRegistry()
    names: list = []
    _names(obj, names)
    registry.register(names)
    return _decode(obj, registry)


def _decode(obj: Any, registry: VariableRegistry) -> Formula:
    if not isinstance(obj, dict):
        raise FormulaSyntaxError(f"Formula node must be an object, got {type(obj).__name__}")
    if "const" in obj:
        if obj["const"] not in _CONSTS_BY_NAME:
            raise FormulaSyntaxError(f"Unknown constant {obj['const']!r}")
        return _CONSTS_BY_NAME[obj["const"]]
    if "var" in obj:
        return registry.var(str(obj["var"]))

    kind = OPS_BY_NAME.get(obj.get("op"))
    if kind is None:
        raise FormulaSyntaxError(f"Unknown operator {obj.get('op')!r}")
    args = obj.get("args", [])
    arity = 1 if issubclass(kind, Unary) else 2
    if not isinstance(args, list) or len(args) != arity:
        raise FormulaSyntaxError(f"Operator {obj['op']} takes {arity} argument(s)")
    children = [_decode(arg, registry) for arg in args]
    return kind(*children)
