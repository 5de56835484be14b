"""Formula Parser - LALR grammar for the formula language"""
import logging
import re
from typing import Dict, Iterable, List, Optional, Sequence

from lark import Lark, Transformer, Tree, v_args
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from src.exceptions import FormulaSyntaxError, UnknownTokenError
from src.formula.ast import (
    HALF,
    ONE,
    ZERO,
    Arrow,
    Delta,
    Dpar,
    Flip,
    Formula,
    Join,
    Meet,
    Nabla,
    Neg,
    Var,
    Vee,
)

logger = logging.getLogger(__name__)

# Tightest first: unary prefixes, &, #, |, ~>. All binary operators are left-associative.
FORMULA_GRAMMAR = r"""
    ?start: arrow_expr

    ?arrow_expr: or_expr
               | arrow_expr "~>" or_expr       -> arrow

    ?or_expr: join_expr
            | or_expr "|" join_expr            -> vee

    ?join_expr: and_expr
              | join_expr "#" and_expr         -> join

    ?and_expr: unary_expr
             | and_expr "&" unary_expr         -> meet

    ?unary_expr: atom
               | "!" unary_expr                -> neg
               | "N" unary_expr                -> nabla
               | "T" unary_expr                -> delta
               | "F" unary_expr                -> flip

    ?atom: "0"                                 -> zero
         | "h"                                 -> half
         | "1/2"                               -> half
         | "1"                                 -> one
         | IDENT                               -> var
         | "(" arrow_expr ")"
         | "d" "(" arrow_expr "," arrow_expr ")" -> dpar

    IDENT: /[A-Za-z_][A-Za-z0-9_]*/

    %import common.WS
    %ignore WS
"""

CANONICAL_VARIABLE = re.compile(r"X([1-9][0-9]*)")


class VariableRegistry:
    """
    Maps identifiers to 1-based variable indices

    `X<k>` always maps to k. Any other identifier receives the next index
    after the largest one in use, in first-occurrence order.
    """

    def __init__(self):
        self._indices: Dict[str, int] = {}

    def register(self, names: Iterable[str]) -> None:
        """
        Register identifiers in first-occurrence order

        Args:
            names: Identifiers as they occur in the input

        Raises:
            FormulaSyntaxError: If a canonical name collides with an index already given away
        """
        ordered = [name for name in dict.fromkeys(names) if name not in self._indices]
        taken = {index: name for name, index in self._indices.items()}

        for name in ordered:
            match = CANONICAL_VARIABLE.fullmatch(name)
            if match:
                index = int(match.group(1))
                if index in taken:
                    raise FormulaSyntaxError(
                        f"Variable {name} collides with {taken[index]} (index {index})"
                    )
                self._indices[name] = index
                taken[index] = name

        next_index = max(self._indices.values(), default=0) + 1
        for name in ordered:
            if name not in self._indices:
                self._indices[name] = next_index
                next_index += 1

    def index_of(self, name: str) -> int:
        if name not in self._indices:
            self.register([name])
        return self._indices[name]

    def var(self, name: str) -> Var:
        return Var(name, self.index_of(name))

    @property
    def index_map(self) -> Dict[str, int]:
        """Identifier to index map, sorted by index"""
        return dict(sorted(self._indices.items(), key=lambda item: item[1]))


@v_args(inline=True)
class _AstBuilder(Transformer):
    """Turns lark parse trees into Formula nodes"""

    def __init__(self, registry: VariableRegistry):
        super().__init__()
        self.registry = registry

    def zero(self):
        return ZERO

    def half(self):
        return HALF

    def one(self):
        return ONE

    def var(self, token):
        return self.registry.var(str(token))

    def neg(self, operand):
        return Neg(operand)

    def nabla(self, operand):
        return Nabla(operand)

    def delta(self, operand):
        return Delta(operand)

    def flip(self, operand):
        return Flip(operand)

    def meet(self, left, right):
        return Meet(left, right)

    def join(self, left, right):
        return Join(left, right)

    def vee(self, left, right):
        return Vee(left, right)

    def arrow(self, left, right):
        return Arrow(left, right)

    def dpar(self, left, right):
        return Dpar(left, right)


class FormulaParser:
    """Parses formula text into ASTs"""

    def __init__(self):
        self.parser = Lark(FORMULA_GRAMMAR, parser="lalr", lexer="contextual")
        self._display = {
            terminal.name: self._display_name(terminal) for terminal in self.parser.terminals
        }
        self._display["$END"] = "end of input"

    @staticmethod
    def _display_name(terminal) -> str:
        if terminal.name == "IDENT":
            return "identifier"
        if terminal.pattern.type == "str":
            return repr(terminal.pattern.value)
        return terminal.name

    def parse_tree(self, text: str) -> Tree:
        """
        Parse text into a lark tree

        Raises:
            UnknownTokenError: If the text contains a character sequence that is not a token
            FormulaSyntaxError: If the tokens do not form a formula
        """
        try:
            return self.parser.parse(text)
        except UnexpectedCharacters as e:
            raise UnknownTokenError(
                f"Unknown token {text[e.pos_in_stream]!r}",
                position=e.pos_in_stream,
                expected=self._readable(e.allowed or ()),
            ) from None
        except UnexpectedToken as e:
            position = e.token.start_pos if e.token.start_pos is not None else len(text)
            if e.token.type == "$END":
                message = "Unexpected end of input"
                position = len(text)
            else:
                message = f"Unexpected token {str(e.token)!r}"
            raise FormulaSyntaxError(
                message, position=position, expected=self._readable(e.expected)
            ) from None
        except UnexpectedInput as e:
            raise FormulaSyntaxError("Unexpected input", position=len(text)) from None

    def _readable(self, names: Iterable[str]) -> List[str]:
        return [self._display.get(name, name) for name in names]

    def parse(self, text: str, registry: Optional[VariableRegistry] = None) -> Formula:
        """
        Parse a single formula

        Args:
            text: Formula text
            registry: Variable registry to share between calls (a fresh one by default)

        Returns:
            The formula AST
        """
        return self.parse_many([text], registry)[0]

    def parse_many(
        self, texts: Sequence[str], registry: Optional[VariableRegistry] = None
    ) -> List[Formula]:
        """
        Parse several formulas with a shared variable index map

        Identifiers are registered across all texts before any AST is built,
        so non-canonical names are indexed after every `X<k>` in the batch.
        """
        registry = registry if registry is not None else VariableRegistry()
        trees = [self.parse_tree(text) for text in texts]

        names = []
        for tree in trees:
            names.extend(
                str(token)
                for token in tree.scan_values(lambda v: getattr(v, "type", None) == "IDENT")
            )
        registry.register(names)

        builder = _AstBuilder(registry)
        formulas = [self._build(builder, tree) for tree in trees]
        logger.debug(f"Parsed {len(formulas)} formula(s); variables {registry.index_map}")
        return formulas

    @staticmethod
    def _build(builder: _AstBuilder, tree) -> Formula:
        # A bare identifier collapses to a single token tree
        if isinstance(tree, Tree):
            return builder.transform(tree)
        return builder.var(tree)


_default_parser: Optional[FormulaParser] = None


def get_parser() -> FormulaParser:
    """Shared parser instance (grammar compiled once)"""
    global _default_parser
    if _default_parser is None:
        _default_parser = FormulaParser()
    return _default_parser


def parse(text: str, registry: Optional[VariableRegistry] = None) -> Formula:
    return get_parser().parse(text, registry)


def parse_many(texts: Sequence[str], registry: Optional[VariableRegistry] = None) -> List[Formula]:
    return get_parser().parse_many(texts, registry)
