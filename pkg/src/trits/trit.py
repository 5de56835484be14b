"""Trit - the three truth values 0, 1/2 and 1"""
from enum import IntEnum
from fractions import Fraction


class Trit(IntEnum):
    """
    An element of {0, 1/2, 1}

    The integer value (0, 1, 2) is the digit used for valuation indexing;
    it also follows the numeric order 0 < 1/2 < 1.
    """

    ZERO = 0
    HALF = 1
    ONE = 2

    @property
    def symbol(self) -> str:
        """Textual symbol: 0, h or 1"""
        return _SYMBOLS[self]

    @property
    def fraction(self) -> Fraction:
        """Numeric reading of the trit"""
        return Fraction(int(self), 2)

    @property
    def is_boolean(self) -> bool:
        return self is not Trit.HALF

    @classmethod
    def parse(cls, symbol: str) -> "Trit":
        """
        Parse a trit symbol

        Args:
            symbol: One of "0", "h", "1/2", "1"

        Returns:
            The corresponding Trit

        Raises:
            ValueError: If the symbol is not a trit
        """
        try:
            return _BY_SYMBOL[symbol.strip()]
        except KeyError:
            raise ValueError(f"Not a trit symbol: {symbol!r}")

    @classmethod
    def parse_word(cls, word: str) -> tuple:
        """Parse a word such as "0h1" into a tuple of trits ("1/2" is not allowed inside words)"""
        result = []
        for position, char in enumerate(word):
            if char not in ("0", "h", "1"):
                raise ValueError(f"Bad trit character {char!r} at position {position}")
            result.append(_BY_SYMBOL[char])
        return tuple(result)

    @staticmethod
    def word(trits) -> str:
        return "".join(t.symbol for t in trits)

    def __str__(self) -> str:
        return self.symbol


_SYMBOLS = {Trit.ZERO: "0", Trit.HALF: "h", Trit.ONE: "1"}
_BY_SYMBOL = {"0": Trit.ZERO, "h": Trit.HALF, "1/2": Trit.HALF, "1": Trit.ONE}

TRITS = (Trit.ZERO, Trit.HALF, Trit.ONE)
