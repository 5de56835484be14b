"""Unit tests for the formula parser, printer and JSON codec"""
import pytest

from src.exceptions import FormulaSyntaxError, UnknownTokenError
from src.formula import (
    HALF,
    ONE,
    ZERO,
    Arrow,
    Dpar,
    Join,
    Meet,
    Nabla,
    Neg,
    Style,
    Var,
    VariableRegistry,
    Vee,
    X,
    from_json,
    parse,
    parse_many,
    render,
    to_json,
)


class TestParser:
    """Test parsing of the formula grammar"""

    def test_constants(self):
        """Test the constant spellings"""
        assert parse("0") == ZERO
        assert parse("h") == HALF
        assert parse("1/2") == HALF
        assert parse("1") == ONE

    def test_dpar_call_syntax(self):
        """Test d(a, b) with arbitrary spacing"""
        assert parse("d( h ,0)") == Dpar(HALF, ZERO)
        assert parse("d(X1, d(X2, 0))") == Dpar(X(1), Dpar(X(2), ZERO))

    def test_precedence(self):
        """Test that & binds tighter than #, which binds tighter than |, then ~>"""
        assert parse("X1 & X2 # X3") == Join(Meet(X(1), X(2)), X(3))
        assert parse("X1 | X2 # X3") == Vee(X(1), Join(X(2), X(3)))
        assert parse("X1 | X2 ~> X3") == Arrow(Vee(X(1), X(2)), X(3))

    def test_left_associativity(self):
        """Test that binary operators associate to the left"""
        assert parse("X1 # X2 # X3") == Join(Join(X(1), X(2)), X(3))

    def test_prefix_operators(self):
        """Test stacked unary prefixes"""
        assert parse("N !X1") == Nabla(Neg(X(1)))
        assert parse("!!X1") == Neg(Neg(X(1)))

    def test_unexpected_end(self):
        """Test that a dangling operator reports the end position"""
        with pytest.raises(FormulaSyntaxError) as excinfo:
            parse("X1 &")
        assert excinfo.value.position == 4
        assert "end of input" in str(excinfo.value)

    def test_unknown_token(self):
        """Test that a stray character is an unknown token with its position"""
        with pytest.raises(UnknownTokenError) as excinfo:
            parse("X1 $ X2")
        assert excinfo.value.position == 3

    def test_unbalanced_parenthesis(self):
        """Test that a missing parenthesis is a syntax error"""
        with pytest.raises(FormulaSyntaxError):
            parse("(X1 # X2")


class TestVariableRegistry:
    """Test identifier to index assignment"""

    def test_canonical_names_keep_their_index(self):
        """Test that X<k> maps to k"""
        assert parse("X3") == Var("X3", 3)

    def test_other_names_follow_the_largest_index(self):
        """Test that free names are numbered after every X<k> in the batch"""
        first, second = parse_many(["p & q", "X1"])
        assert first == Meet(Var("p", 2), Var("q", 3))
        assert second == X(1)

    def test_shared_registry(self):
        """Test that one registry keeps indices across calls"""
        registry = VariableRegistry()
        parse("p # q", registry)
        assert registry.index_map == {"p": 1, "q": 2}
        assert parse("q", registry) == Var("q", 2)

    def test_collision_is_an_error(self):
        """Test that X1 cannot be registered after p took index 1"""
        registry = VariableRegistry()
        parse("p", registry)
        with pytest.raises(FormulaSyntaxError):
            parse("X1", registry)


class TestPrinter:
    """Test rendering in the core and sugared styles"""

    @pytest.mark.parametrize(
        "text",
        ["X1 & X2 # X3", "X1 # (X2 # X3)", "!(X1 & X2)", "N !X1", "d(h,X1)", "X1 | X2 ~> X3"],
    )
    def test_render_parses_back(self, text):
        """Test that rendering reproduces canonical text"""
        assert render(parse(text)) == text

    def test_core_style_keeps_the_tree(self):
        """Test that the core style does not rewrite"""
        assert render(parse("d(h, X1)")) == "d(h,X1)"

    def test_sugared_style(self):
        """Test the resugared presentation"""
        assert render(parse("d(h, X1)"), Style.SUGARED) == "!X1"
        assert render(parse("d(X1, 0)"), Style.SUGARED) == "N X1"
        assert render(parse("d(h, 0)"), Style.SUGARED) == "1"


class TestJsonCodec:
    """Test the JSON formula codec"""

    def test_encode(self):
        """Test the node layout"""
        assert to_json(parse("X1 # h")) == {
            "op": "join",
            "args": [{"var": "X1"}, {"const": "h"}],
        }

    def test_decode(self):
        """Test decoding with free names"""
        obj = {"op": "neg", "args": [{"op": "meet", "args": [{"var": "p"}, {"const": "1"}]}]}
        assert from_json(obj) == Neg(Meet(Var("p", 1), ONE))

    def test_decode_wrong_arity(self):
        """Test that a unary operator with two arguments is rejected"""
        with pytest.raises(FormulaSyntaxError):
            from_json({"op": "neg", "args": [{"const": "0"}, {"const": "1"}]})

    def test_decode_unknown_operator(self):
        """Test that unknown operators are rejected"""
        with pytest.raises(FormulaSyntaxError):
            from_json({"op": "xor", "args": []})
