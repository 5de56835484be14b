"""Unit tests for valuations, truth tables, evaluation and consequence"""
import pytest

from src.exceptions import ArityError, IncompatibleTheoryError, PreconditionError
from src.formula import HALF, ZERO, Meet, X, parse
from src.semantics import (
    Mode,
    Theory,
    TruthTable,
    Valuation,
    Verdict,
    compactness_core,
    compatibility,
    entails,
    entails_via_meet,
    entails_via_reduction,
    equivalent,
    equivalent_via_reduction,
    evaluate,
    is_tautology,
    meet_formula,
    meet_term,
    meet_table_fold,
    nonmonotonicity_witness,
    post_table,
    post_tautology,
    reduce_post_to_rm,
    table,
)
from src.trits import Trit


class TestValuation:
    """Test valuation indexing and text forms"""

    def test_index_is_base_three_with_x1_most_significant(self):
        """Test the digit order"""
        valuation = Valuation.parse("X1=h X2=1")
        assert valuation == Valuation(2, 5)
        assert valuation[1] is Trit.HALF
        assert valuation[2] is Trit.ONE

    def test_word_form(self):
        """Test parsing a trit word"""
        valuation = Valuation.parse("0h1")
        assert valuation.m == 3
        assert valuation.index == 5
        assert valuation.word == "0h1"

    def test_unlisted_variables_default_to_zero(self):
        """Test assignments padded to the arity"""
        assert Valuation.parse("X2=1", 3).word == "010"

    def test_text_round_trip(self):
        """Test the assignment text"""
        assert Valuation(2, 5).to_text() == "X1=h X2=1"
        assert Valuation(2, 5).to_json() == ["h", "1"]

    def test_out_of_range(self):
        """Test index and arity checks"""
        with pytest.raises(ArityError):
            Valuation(1, 3)
        with pytest.raises(ArityError):
            Valuation.parse("0h", 3)

    def test_all_in_index_order(self):
        """Test enumeration of every valuation"""
        assert [v.word for v in Valuation.all(1)] == ["0", "h", "1"]
        assert len(list(Valuation.all(0))) == 1


class TestTruthTable:
    """Test the bit-plane truth table"""

    def test_coordinates(self):
        """Test X1 and X2 over two variables"""
        assert TruthTable.coordinate(2, 1).word == "000hhh111"
        assert TruthTable.coordinate(2, 2).word == "0h10h10h1"

    def test_codes_and_word(self):
        """Test the code and word views agree"""
        t = TruthTable.from_word("10h")
        assert t.m == 1
        assert t.codes().tolist() == [2, 0, 1]
        assert t[2] is Trit.HALF

    def test_word_length_must_be_power_of_three(self):
        """Test the length check"""
        with pytest.raises(PreconditionError):
            TruthTable.from_word("0h")

    def test_immutable(self):
        """Test that the planes cannot be written"""
        t = TruthTable.constant(1, Trit.HALF)
        with pytest.raises(ValueError):
            t.zero[0] = True

    def test_text_format(self):
        """Test the two-line text format"""
        t = TruthTable.from_word("0hh1hh11h")
        assert t.to_text() == "m=2\n0hh1hh11h"
        assert TruthTable.from_text(t.to_text()) == t
        with pytest.raises(ValueError):
            TruthTable.from_text("m=1\n0h")

    def test_meet_partial_and_clash(self):
        """Test the pointwise intersection"""
        a, b = TruthTable.from_word("0hh"), TruthTable.from_word("h1h")
        assert a.meet_partial(b).word == "01h"
        assert a.meet_partial(TruthTable.from_word("1hh")) is None
        assert a.clash(TruthTable.from_word("1hh")).tolist() == [True, False, False]

    def test_below(self):
        """Test inclusion of tables"""
        assert TruthTable.from_word("01h").below(TruthTable.from_word("0hh"))
        assert not TruthTable.from_word("0hh").below(TruthTable.from_word("01h"))

    def test_meet_table_fold(self):
        """Test folding from the constant h"""
        tables = [TruthTable.from_word("0hh"), TruthTable.from_word("hh1")]
        assert meet_table_fold(tables, 1).word == "0h1"
        assert meet_table_fold([], 1).word == "hhh"


class TestEvaluation:
    """Test evaluation of formulas"""

    def test_one_from_dpar(self):
        """Test d(h, 0) evaluates to 1 on the empty valuation"""
        assert evaluate(parse("d(h, 0)"), Valuation(0, 0)) is Trit.ONE

    def test_evaluate_matches_table(self):
        """Test pointwise evaluation against the table"""
        formula = parse("d(X1, X2) # X1 & !X2")
        t = table(formula, 2)
        for valuation in Valuation.all(2):
            assert evaluate(formula, valuation) is t[valuation.index]

    def test_join_table(self):
        """Test the table of X1 # X2"""
        assert table(parse("X1 # X2")).word == "0hhhhhhh1"

    def test_arrow_table(self):
        """Test alpha ~> beta is h exactly where alpha is below beta"""
        assert table(parse("X1 ~> X1")).word == "hhh"
        assert table(parse("X1 ~> h")).word == "hhh"
        arrow = table(parse("X1 ~> 0"))
        assert arrow[0] is Trit.HALF
        assert arrow[2] is not Trit.HALF

    def test_arity_errors(self):
        """Test variables beyond the arity"""
        with pytest.raises(ArityError):
            table(parse("X2"), 1)
        with pytest.raises(ArityError):
            evaluate(parse("X2"), Valuation(1, 0))

    def test_tautologies(self):
        """Test the tautology check"""
        assert is_tautology(parse("X1 # !X1"))
        assert is_tautology(HALF)
        assert not is_tautology(parse("X1"))
        assert not is_tautology(parse("X1 | !X1"))

    def test_equivalent(self):
        """Test table equality with sugar"""
        assert equivalent(parse("!X1"), parse("d(h, X1)"))
        assert equivalent(parse("X1"), parse("X1"), 3)
        assert not equivalent(parse("X1"), parse("N X1"))


class TestConsequence:
    """Test compatibility and entailment"""

    def test_incompatible_pair(self):
        """Test the least clash of X1 and !X1"""
        result = compatibility(Theory((X(1), parse("!X1"))))
        assert not result.compatible
        assert result.clash.valuation == Valuation(1, 0)
        assert (result.clash.first, result.clash.second) == (0, 1)

    def test_strict_reading_lets_a_premise_clash_with_itself(self):
        """Test the literal 'values sum to 1' reading"""
        assert compatibility(Theory((X(1),))).compatible
        strict = compatibility(Theory((X(1),)), strict=True)
        assert not strict.compatible
        assert strict.clash.valuation == Valuation(1, 1)
        assert strict.clash.first == strict.clash.second == 0

    def test_entailment_counterexample(self):
        """Test X1 does not entail !X1, failing first at X1=0"""
        verdict = entails(Theory((X(1),)), parse("!X1"))
        assert not verdict.holds
        assert verdict.counterexample.to_text() == "X1=0"

    def test_entailment_holds(self):
        """Test X1 entails X1 # X2 and anything entails h"""
        assert entails(Theory((X(1),)), parse("X1 # X2")).holds
        assert entails(Theory((parse("N X1"),)), HALF).holds

    def test_empty_theory_entails_tautologies_only(self):
        """Test the empty premise set"""
        assert entails(Theory(), parse("X1 # !X1")).holds
        assert not entails(Theory(), X(1)).holds

    def test_incompatible_premises_entail_everything(self):
        """Test explosion"""
        verdict = entails(Theory((X(1), parse("!X1"))), ZERO)
        assert verdict.holds
        assert verdict.mode is Mode.INCOMPATIBLE

    def test_meet_route_agrees(self):
        """Test entailment through the folded intersection"""
        theory = Theory((X(1), parse("X1 # X2")))
        for goal in ["X1", "X2", "X1 # X2", "!X1"]:
            assert entails_via_meet(theory, parse(goal), 2).holds == entails(theory, parse(goal), 2).holds

    def test_meet_route_refuses_incompatible_premises(self):
        """Test the precondition of the meet route"""
        with pytest.raises(IncompatibleTheoryError):
            entails_via_meet(Theory((X(1), parse("!X1"))), ZERO)

    def test_meet_formula(self):
        """Test the formula for the intersection of two tables"""
        first, second = parse("X1 # X2"), parse("X2")
        expected = table(first, 2).meet_partial(table(second, 2))
        assert table(meet_formula(first, second), 2) == expected
        with pytest.raises(IncompatibleTheoryError):
            meet_formula(X(1), parse("!X1"))

    def test_meet_formula_builds_meet_term(self):
        """Test the checked constructor returns the unchecked term"""
        first, second = parse("X1 # X2"), parse("X2")
        assert meet_formula(first, second) == meet_term(first, second)
        assert table(meet_term(X(1), parse("!X1")), 1).word == "1h1"

    def test_verdict_dict_round_trip(self):
        """Test the verdict JSON mirror"""
        verdict = entails(Theory((X(1),)), parse("!X1"))
        assert Verdict.from_dict(verdict.to_dict()) == verdict
        assert verdict.to_dict()["witness"]["valuation"] == ["0"]

    def test_compactness_core(self):
        """Test the kept premises still entail the goal"""
        theory = Theory((X(1), parse("X1 # X2"), HALF))
        core = compactness_core(theory, X(1), 2)
        assert core.formulas == (X(1),)
        assert entails(core, X(1), 2).holds

    def test_compactness_core_needs_entailment(self):
        """Test the precondition"""
        with pytest.raises(PreconditionError):
            compactness_core(Theory((HALF,)), X(1), 1)

    def test_nonmonotonicity_witness(self):
        """Test the returned triple is a genuine witness"""
        alpha, beta, gamma = nonmonotonicity_witness(1)
        assert entails(Theory((alpha,)), gamma, 1).holds
        assert not entails(Theory((Meet(alpha, beta),)), gamma, 1).holds


class TestReductions:
    """Test the reductions to tautology checks"""

    def test_entails_via_reduction(self):
        """Test consequence as a tautology of alpha ~> beta"""
        assert entails_via_reduction(X(1), parse("X1 # X2"))
        assert not entails_via_reduction(X(1), parse("!X1"))

    def test_equivalent_via_reduction(self):
        """Test equivalence as a two-way reduction"""
        assert equivalent_via_reduction(parse("!X1"), parse("d(h, X1)"))
        assert not equivalent_via_reduction(parse("X1"), parse("X1 # X2"))

    def test_post_tables(self):
        """Test Post evaluation"""
        assert post_table(parse("X1 | !X1"), 1).word == "1h1"

    @pytest.mark.parametrize(
        "text,expected",
        [("N X1 | !N X1", True), ("X1 | !X1", False), ("1", True), ("h | 1", True), ("X1 & 1", False)],
    )
    def test_post_tautology_reduction(self, text, expected):
        """Test that the reduced RM formula is a tautology exactly when the Post formula is constantly 1"""
        formula = parse(text)
        assert post_tautology(formula, 1) is expected
        assert is_tautology(reduce_post_to_rm(formula), 1) is expected
