"""Unit tests for rewriting, translation, synthesis and generation"""
import pytest

from src.exceptions import PreconditionError, SignatureError
from src.formula import (
    HALF,
    ONE,
    ZERO,
    Dpar,
    Flip,
    Nabla,
    Neg,
    X,
    desugar,
    enumerate_formulas,
    printed_join_term,
    dpar_post_term,
    is_core,
    is_post_formula,
    join_post_term,
    parse,
    random_formula,
    render,
    representatives,
    resugar,
    substitute,
    synthesize,
    synthesize_values,
    to_post,
    to_rm,
)
from src.semantics import TruthTable, equivalent, post_table, table
from src.trits import Trit


class TestDesugar:
    """Test expansion into the core connectives"""

    def test_one_and_negation(self):
        """Test 1 -> d(h,0) and !a -> d(h,a)"""
        assert render(desugar(ONE)) == "d(h,0)"
        assert render(desugar(parse("!X1"))) == "d(h,X1)"

    @pytest.mark.parametrize(
        "text",
        ["!X1", "N X1", "T X1", "F X1", "X1 | X2", "X1 ~> X2", "1 & !N X2", "F (X1 | !X2)"],
    )
    def test_desugar_is_core_and_equivalent(self, text):
        """Test that desugaring removes sugar without changing the table"""
        sugared = parse(text)
        core = desugar(sugared)
        assert is_core(core)
        assert equivalent(sugared, core, 2)

    def test_shared_subterms_stay_shared(self):
        """Test that a shared operand is rewritten once"""
        shared = parse("!X1")
        core = desugar(Dpar(shared, shared))
        assert core.left is core.right


class TestResugar:
    """Test restoring derived connectives"""

    def test_patterns(self):
        """Test each recognized pattern"""
        a = X(1)
        assert resugar(Dpar(HALF, ZERO)) == ONE
        assert resugar(Dpar(HALF, a)) == Neg(a)
        assert resugar(Dpar(a, ZERO)) == Nabla(a)

    def test_flip_roundtrip(self):
        """Test that the flip expansion is recognized again"""
        assert resugar(desugar(Flip(X(1)))) == Flip(X(1))

    def test_resugar_preserves_table(self):
        """Test resugaring on a mixed core formula"""
        core = parse("d(d(h, X1), 0) # d(h, d(X2, 0))")
        assert equivalent(core, resugar(core), 2)


class TestTranslations:
    """Test the Post and RM signature translations"""

    def test_to_rm_requires_post(self):
        """Test that non-Post input is rejected"""
        with pytest.raises(SignatureError):
            to_rm(parse("X1 # X2"))

    def test_to_rm_is_core(self):
        """Test translating a Post formula"""
        rm = to_rm(parse("N X1 | !X2 & 1"))
        assert is_core(rm)
        assert equivalent(rm, parse("N X1 | !X2 & 1"), 2)

    @pytest.mark.parametrize("text", ["X1 # X2", "d(X1, X2)", "d(h, X1) # X2", "F X1"])
    def test_to_post(self, text):
        """Test translating into the Post signature keeps the table"""
        formula = parse(text)
        translated = to_post(formula)
        assert is_post_formula(translated)
        assert equivalent(formula, translated, 2)

    def test_to_post_dpar_shortcuts(self):
        """Test that d(a,0) and d(h,a) translate directly"""
        assert to_post(parse("d(X1, 0)")) == Nabla(X(1))
        assert to_post(parse("d(h, X1)")) == Neg(X(1))

    def test_post_terms(self):
        """Test the Post terms for join and dpar against the operations"""
        assert equivalent(join_post_term(), parse("X1 # X2"), 2)
        assert equivalent(dpar_post_term(), parse("d(X1, X2)"), 2)
        assert post_table(join_post_term(), 2) == table(parse("X1 # X2"), 2)

    def test_literal_join_term_differs(self):
        """Test that the printed join term is not the join"""
        literal = table(printed_join_term(), 2)
        join = table(parse("X1 # X2"), 2)
        assert literal != join
        # X1 most significant: (h, 0) is index 3, (1, 0) is index 6
        differing = [v for v in range(9) if literal[v] is not join[v]]
        assert differing == [3, 6]

    def test_substitute(self):
        """Test substitution by index"""
        result = substitute(parse("X1 # X2"), {2: parse("!X1")})
        assert render(result) == "X1 # !X1"


class TestSynthesis:
    """Test formula synthesis from truth tables"""

    def test_all_unary_tables(self, unary_tables):
        """Test that every unary table is realized"""
        for target in unary_tables:
            assert table(synthesize(target), 1) == target

    def test_binary_tables(self, rng):
        """Test random binary tables"""
        for _ in range(20):
            target = TruthTable.from_codes(2, rng.integers(0, 3, size=9))
            assert table(synthesize(target), 2) == target

    def test_post_signature(self, unary_tables):
        """Test synthesis in the Post signature"""
        for target in unary_tables[:9]:
            formula = synthesize(target, "post")
            assert is_post_formula(formula)
            assert post_table(formula, 1) == target

    def test_zero_table(self):
        """Test that the all-zero table gives the constant 0"""
        assert synthesize(TruthTable.constant(1, Trit.ZERO)) == ZERO

    def test_needs_positive_arity(self):
        """Test the arity precondition"""
        with pytest.raises(PreconditionError):
            synthesize_values([Trit.HALF], 0)
        with pytest.raises(PreconditionError):
            synthesize_values([Trit.HALF] * 4, 1)


class TestGeneration:
    """Test enumeration, random formulas and representatives"""

    def test_enumerate_core_counts(self):
        """Test counts by size over one variable"""
        formulas = list(enumerate_formulas(3, 1, "core"))
        # 3 leaves, no size-2 formulas, 3 connectives over 3 x 3 leaf pairs
        assert len(formulas) == 3 + 27
        assert all(f.size <= 3 for f in formulas)

    def test_enumerate_post_uses_post_connectives(self):
        """Test the Post signature"""
        assert all(is_post_formula(f) for f in enumerate_formulas(4, 2, "post"))

    def test_unknown_signature(self):
        """Test that an unknown signature is rejected"""
        with pytest.raises(ValueError):
            list(enumerate_formulas(2, 1, "modal"))

    def test_random_formula(self, rng):
        """Test random formulas stay in their signature and budget"""
        for _ in range(20):
            formula = random_formula(rng, 9, 2, "post")
            assert is_post_formula(formula)
            assert formula.size <= 9
            assert formula.max_index() <= 2

    def test_representatives_reach_27_tables(self):
        """Test that 0, h, X1 generate every unary table"""
        found = representatives(1)
        assert len(found) == 27
        for values, formula in found.items():
            assert is_core(formula)
            assert table(formula, 1).codes().tolist() == list(values)

    def test_representatives_arity_limit(self):
        """Test the arity precondition"""
        with pytest.raises(PreconditionError):
            representatives(2)
