"""Unit tests for Trit and TritOps"""
import pytest
from fractions import Fraction

from src.trits import TRITS, Trit, TritOps

Z, H, O = Trit.ZERO, Trit.HALF, Trit.ONE


class TestTrit:
    """Test trit symbols, parsing and numeric reading"""

    def test_symbols(self):
        """Test the textual symbols"""
        assert [t.symbol for t in TRITS] == ["0", "h", "1"]

    def test_parse_accepts_half_spellings(self):
        """Test that both h and 1/2 denote the middle value"""
        assert Trit.parse("h") is H
        assert Trit.parse("1/2") is H
        assert Trit.parse(" 1 ") is O

    def test_parse_rejects_other_symbols(self):
        """Test that anything else raises ValueError"""
        with pytest.raises(ValueError):
            Trit.parse("2")

    def test_parse_word(self):
        """Test parsing a word of trits"""
        assert Trit.parse_word("0h1") == (Z, H, O)
        with pytest.raises(ValueError):
            Trit.parse_word("0x1")

    def test_fraction_and_order(self):
        """Test that the digit order is the numeric order"""
        assert [t.fraction for t in TRITS] == [Fraction(0), Fraction(1, 2), Fraction(1)]
        assert TritOps.numeric_leq(Z, H) and TritOps.numeric_leq(H, O)
        assert not TritOps.numeric_leq(O, H)


class TestTritOps:
    """Test the printed tables and the derived operations"""

    def test_join_table(self):
        """Test the join table row by row"""
        rows = [[TritOps.join(x, y) for y in TRITS] for x in TRITS]
        assert rows == [[Z, H, H], [H, H, H], [H, H, O]]

    def test_dpar_table(self):
        """Test the antipodal operation row by row"""
        rows = [[TritOps.dpar(x, y) for y in TRITS] for x in TRITS]
        assert rows == [[Z, H, Z], [O, H, Z], [O, H, O]]

    def test_one_is_dpar_of_half_and_zero(self):
        """Test d(h, 0) = 1"""
        assert TritOps.dpar(H, Z) is O

    def test_sugar_through_dpar(self):
        """Test !x = d(h, x) and N x = d(x, 0)"""
        for x in TRITS:
            assert TritOps.neg(x) is TritOps.dpar(H, x)
            assert TritOps.nabla(x) is TritOps.dpar(x, Z)

    def test_delta_is_dual_of_nabla(self):
        """Test T x = !N !x"""
        for x in TRITS:
            assert TritOps.delta(x) is TritOps.neg(TritOps.nabla(TritOps.neg(x)))

    def test_flip_values(self):
        """Test flip fixes 0 and swaps h and 1"""
        assert [TritOps.flip(x) for x in TRITS] == [Z, O, H]

    def test_meet_partial_undefined_exactly_on_clash(self):
        """Test the intersection is undefined only for {0, 1}"""
        for x, y in TritOps.pairs():
            undefined = TritOps.meet_partial(x, y) is None
            assert undefined == (not TritOps.compatible(x, y))
        assert TritOps.meet_partial(H, O) is O
        assert TritOps.meet_partial(Z, H) is Z

    def test_below_is_the_face_order(self):
        """Test that 0 and 1 sit below h and nowhere else"""
        assert TritOps.below(Z, H) and TritOps.below(O, H)
        assert not TritOps.below(H, Z)
        assert not TritOps.below(Z, O)

    def test_sharper_matches_below(self):
        """Test that sharpening and inclusion agree on single trits"""
        for x, y in TritOps.pairs():
            assert TritOps.sharper(x, y) == TritOps.below(x, y)

    def test_tables_as_grids(self):
        """Test the symbol grids used in reports"""
        grids = TritOps.tables_as_grids()
        assert grids["meet_partial"] == (("0", "0", "u"), ("0", "h", "1"), ("u", "1", "1"))
        assert grids["join"][1] == ("h", "h", "h")
