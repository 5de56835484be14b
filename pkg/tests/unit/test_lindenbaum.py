"""Unit tests for Mod(T), Lindenbaum algebras and the face correspondences"""
import pytest

from src.algebra import faces_algebra, free_rm, is_isomorphism
from src.config import Config
from src.exceptions import AlgebraSizeError, ArityError, PreconditionError, SignatureError
from src.faces import all_faces
from src.formula import Join, Meet, X, parse
from src.lindenbaum import (
    BoolTheory,
    bool_lind,
    bool_mod,
    bool_synthesize,
    boolean_points,
    class_index,
    congruence_check,
    lind,
    lindenbaum,
    mod_set,
    restriction,
    table_correspondence_check,
)
from src.lindenbaum.boolean import bool_value
from src.semantics import Theory, table
from src.trits import Trit


class TestModSet:
    """Test the valuations where every premise is h"""

    def test_empty_theory_keeps_every_valuation(self):
        """Test Mod of the empty theory"""
        assert mod_set(Theory(), 1).valuations == (0, 1, 2)

    def test_single_variable(self):
        """Test Mod({X1}) over two variables"""
        mod = mod_set(Theory((X(1),)), 2)
        assert mod.valuations == (3, 4, 5)
        assert 4 in mod
        assert [v.word for v in mod.as_valuations()] == ["h0", "hh", "h1"]

    def test_no_models(self):
        """Test a premise that is never h"""
        assert len(mod_set(Theory((parse("N X1"),)), 1)) == 0

    def test_arity_check(self):
        """Test premises beyond the arity"""
        with pytest.raises(ArityError):
            mod_set(Theory((X(2),)), 1)

    def test_restriction_and_class_index(self):
        """Test the restriction of a table to Mod(T) and its element index"""
        mod = mod_set(Theory(), 1)
        assert restriction(table(X(1), 1), mod) == (0, 1, 2)
        assert class_index(X(1), mod) == 5

    def test_to_dict(self):
        """Test the JSON view"""
        assert mod_set(Theory((X(1),)), 1).to_dict() == {"m": 1, "valuations": [["h"]]}


class TestLindenbaum:
    """Test Lindenbaum algebras and their certification"""

    def test_empty_theory_is_the_free_algebra(self):
        """Test that with no premises the algebra is F_3 at arity 1"""
        result = lindenbaum(Theory(), 1)
        assert result.algebra.size == 27
        assert result.certification == "isomorphism"
        assert result.dimension == 3

    def test_single_premise(self):
        """Test Lind({X1}) at arity 1 is zeta"""
        result = lindenbaum(Theory((X(1),)), 1)
        assert result.algebra.size == 3
        assert result.isomorphism is not None
        assert result.to_dict()["faces_dimension"] == 1

    def test_empty_mod_gives_the_trivial_algebra(self):
        """Test a theory with no models"""
        result = lindenbaum(Theory((parse("N X1"),)), 1)
        assert result.certification == "trivial"
        assert lind(Theory((parse("N X1"),)), 1).size == 1

    def test_empty_theory_matches_free_algebra(self):
        """Test that restricting free_rm(1) to Mod(empty) is a bijection preserving the operations"""
        free = free_rm(1)
        result = lindenbaum(Theory(), 1)
        algebra = result.algebra
        tables = [free.table_at(i) for i in range(free.size)]
        images = [result.element_of(t) for t in tables]
        assert sorted(images) == list(range(27))

        half = algebra.constants["half"]
        for i, a in enumerate(tables):
            assert algebra.binary["dpar"][half, images[i]] == images[free.index_of(a.neg())]
            for j, b in enumerate(tables):
                assert algebra.binary["join"][images[i], images[j]] == images[free.index_of(a.join(b))]
                assert algebra.binary["dpar"][images[i], images[j]] == images[free.index_of(a.dpar(b))]
                assert algebra.binary["meet"][images[i], images[j]] == images[free.index_of(a.meet(b))]

    def test_isomorphism_is_checked_on_the_built_tables(self):
        """Test the certificate maps the restriction algebra onto F_3"""
        result = lindenbaum(Theory(), 1)
        assert is_isomorphism(result.algebra, faces_algebra(3), result.isomorphism)
        assert sorted(result.algebra.labels) == sorted(face.word for face in all_faces(3))

    def test_carrier_is_the_restrictions_to_mod(self):
        """Test a theory whose models are hh, h1 and 1h"""
        theory = Theory.of([parse("X1 # X2"), parse("X1 # 0"), parse("X2 # 0")])
        result = lindenbaum(theory, 2)
        assert result.mod.valuations == (4, 5, 7)
        assert result.algebra.size == 27
        assert result.certification == "isomorphism"
        labels = result.algebra.labels
        assert labels[result.element_of(table(X(1), 2))] == "hh1"
        assert labels[result.element_of(table(X(2), 2))] == "h1h"

        formulas = [parse(text) for text in ("X1", "X2", "!X1 & X2", "d(X1, X2)", "N X2 # X1", "h")]
        for f in formulas:
            word = "".join(Trit(c).symbol for c in restriction(table(f, 2), result.mod))
            assert labels[result.element_of(table(f, 2))] == word
            for g in formulas:
                pair = (result.element_of(table(f, 2)), result.element_of(table(g, 2)))
                assert result.algebra.binary["join"][pair] == result.element_of(table(Join(f, g), 2))
                assert result.algebra.binary["meet"][pair] == result.element_of(table(Meet(f, g), 2))

    def test_models_decide_the_classes(self):
        """Test that theories with one model each separate X1 by that model"""
        at_hh = lindenbaum(Theory.of([X(1), X(2)]), 2)
        at_h1 = lindenbaum(Theory.of([X(1), parse("h & T X2")]), 2)
        assert at_h1.mod.valuations == (5,)
        assert at_hh.algebra.labels[at_hh.element_of(table(X(2), 2))] == "h"
        assert at_h1.algebra.labels[at_h1.element_of(table(X(2), 2))] == "1"

    def test_element_of_checks_arity(self):
        """Test tables of another arity"""
        with pytest.raises(ArityError):
            lindenbaum(Theory(), 1).element_of(table(X(1), 2))

    def test_cardinality_fallback(self, monkeypatch):
        """Test certification beyond the isomorphism bound"""
        monkeypatch.setattr(Config, "ISO_MAX_CARRIER", 9)
        result = lindenbaum(Theory((X(1),)), 2)
        assert result.certification == "cardinality"
        assert result.algebra.size == 27

    def test_table_bound(self, monkeypatch):
        """Test the bound on |Mod(T)|"""
        monkeypatch.setattr(Config, "LIND_MAX_TABLE_DIM", 2)
        with pytest.raises(AlgebraSizeError):
            lindenbaum(Theory(), 1)

    def test_congruence(self):
        """Test that agreement on Mod(T) is preserved by the operations"""
        report = congruence_check(Theory((X(1),)), 2, pairs=10, size=5, seed=3)
        assert report.passed
        assert report.checked == 30


class TestBooleanSide:
    """Test two-valued models and the boolean Lindenbaum algebra"""

    def test_boolean_points(self):
        """Test lexicographic order"""
        assert boolean_points(2) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_bool_mod(self):
        """Test the models of a disjunction"""
        theory = BoolTheory((parse("X1 | X2"),))
        assert bool_mod(theory) == [(0, 1), (1, 0), (1, 1)]
        assert bool_lind(theory).size == 8

    def test_inconsistent_theory(self):
        """Test the trivial boolean algebra"""
        assert bool_lind(BoolTheory((parse("X1 & !X1"),))).size == 1

    def test_rm_connectives_are_rejected(self):
        """Test the boolean signature"""
        with pytest.raises(SignatureError):
            BoolTheory((parse("d(X1, X2)"),))

    def test_bool_synthesize(self):
        """Test the normal form holds exactly on its valuations"""
        chosen = [(0, 1), (1, 1)]
        formula = bool_synthesize(chosen, 2)
        assert [p for p in boolean_points(2) if bool_value(formula, p)] == chosen
        assert bool_value(bool_synthesize([], 2), (1, 1)) == 0
        with pytest.raises(ArityError):
            bool_synthesize([(1,)], 2)


class TestCorrespondence:
    """Test the simplex and cube correspondence checks"""

    @pytest.mark.parametrize("which,m", [(1, 1), (1, 2), (2, 1)])
    def test_rows_pass(self, which, m):
        """Test every row at the exhaustive arities"""
        report = table_correspondence_check(which, m)
        assert report.passed, "\n".join(report.lines())
        assert report.to_dict()["table"] == which

    def test_frame(self):
        """Test the tabular view"""
        frame = table_correspondence_check(1, 1).to_frame()
        assert list(frame.columns) == ["row", "description", "status", "counts"]
        assert set(frame["status"]) == {"PASS"}

    def test_preconditions(self):
        """Test the table number and arity checks"""
        with pytest.raises(PreconditionError):
            table_correspondence_check(3)
        with pytest.raises(PreconditionError):
            table_correspondence_check(1, 3)
