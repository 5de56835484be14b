"""Truth Table - a total function {0,h,1}^m -> {0,h,1} stored as two boolean planes"""
from typing import Iterable, List, Optional

import numpy as np

from src.exceptions import ArityError, PreconditionError
from src.trits import Trit


def _frozen(plane: np.ndarray) -> np.ndarray:
    plane = np.ascontiguousarray(plane, dtype=bool)
    plane.setflags(write=False)
    return plane


class TruthTable:
    """
    Truth table of arity m

    `zero[i]` and `one[i]` mark the valuations with value 0 and 1; the
    remaining entries are h. Every pointwise operation is a bitwise formula
    over the planes. Tables are immutable.
    """

    __slots__ = ("m", "zero", "one")

    def __init__(self, m: int, zero: np.ndarray, one: np.ndarray):
        if m < 0:
            raise ArityError(f"Arity must be non-negative, got {m}")
        if zero.shape != (3 ** m,) or one.shape != (3 ** m,):
            raise ValueError(f"Planes must have length {3 ** m} for arity {m}")
        if np.any(zero & one):
            raise ValueError("An entry cannot be both 0 and 1")
        self.m = m
        self.zero = _frozen(zero)
        self.one = _frozen(one)

    # Construction
    @classmethod
    def from_codes(cls, m: int, codes: Iterable[int]) -> "TruthTable":
        """From digit codes 0, 1, 2 (0, h, 1)"""
        codes = np.asarray(list(codes) if not isinstance(codes, np.ndarray) else codes, dtype=np.int8)
        return cls(m, codes == 0, codes == 2)

    @classmethod
    def from_trits(cls, m: int, values: Iterable[Trit]) -> "TruthTable":
        return cls.from_codes(m, [int(value) for value in values])

    @classmethod
    def from_word(cls, word: str, m: Optional[int] = None) -> "TruthTable":
        """From a word such as "0h1"; the arity is inferred from its length"""
        values = Trit.parse_word(word)
        if m is None:
            m = _arity_of_length(len(values))
        return cls.from_trits(m, values)

    @classmethod
    def constant(cls, m: int, value: Trit) -> "TruthTable":
        size = 3 ** m
        return cls(m, np.full(size, value is Trit.ZERO), np.full(size, value is Trit.ONE))

    @classmethod
    def coordinate(cls, m: int, variable_index: int) -> "TruthTable":
        """Table of X<variable_index>"""
        if not 1 <= variable_index <= m:
            raise ArityError(f"Variable X{variable_index} exceeds arity {m}")
        digits = (np.arange(3 ** m) // 3 ** (m - variable_index)) % 3
        return cls(m, digits == 0, digits == 2)

    # Views
    @property
    def half(self) -> np.ndarray:
        return ~(self.zero | self.one)

    def codes(self) -> np.ndarray:
        """Digit codes 0, 1, 2 in valuation-index order"""
        return (self.one.astype(np.int8) * 2) + self.half.astype(np.int8)

    def trits(self) -> List[Trit]:
        return [Trit(int(code)) for code in self.codes()]

    @property
    def word(self) -> str:
        return "".join("0h1"[code] for code in self.codes())

    def key(self) -> bytes:
        """Packed bit representation of both planes"""
        return bytes([self.m]) + np.packbits(self.zero).tobytes() + np.packbits(self.one).tobytes()

    def __len__(self) -> int:
        return 3 ** self.m

    def __getitem__(self, index: int) -> Trit:
        if self.zero[index]:
            return Trit.ZERO
        return Trit.ONE if self.one[index] else Trit.HALF

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruthTable):
            return NotImplemented
        return (
            self.m == other.m
            and np.array_equal(self.zero, other.zero)
            and np.array_equal(self.one, other.one)
        )

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        return f"TruthTable(m={self.m}, {self.word!r})"

    def is_constant(self, value: Trit) -> bool:
        if value is Trit.ZERO:
            return bool(self.zero.all())
        if value is Trit.ONE:
            return bool(self.one.all())
        return not bool((self.zero | self.one).any())

    def restrict(self, indices) -> np.ndarray:
        """Digit codes at the given valuation indices"""
        return self.codes()[np.asarray(indices, dtype=np.int64)]

    # Pointwise operations
    def _check(self, other: "TruthTable") -> None:
        if self.m != other.m:
            raise ArityError(f"Tables of arity {self.m} and {other.m} cannot be combined")

    def join(self, other: "TruthTable") -> "TruthTable":
        self._check(other)
        return TruthTable(self.m, self.zero & other.zero, self.one & other.one)

    def dpar(self, other: "TruthTable") -> "TruthTable":
        self._check(other)
        one = (~self.zero & other.zero) | (self.one & other.one)
        zero = (self.zero & other.zero) | (~self.one & other.one)
        return TruthTable(self.m, zero, one)

    def meet(self, other: "TruthTable") -> "TruthTable":
        self._check(other)
        return TruthTable(self.m, self.zero | other.zero, self.one & other.one)

    def vee(self, other: "TruthTable") -> "TruthTable":
        self._check(other)
        return TruthTable(self.m, self.zero & other.zero, self.one | other.one)

    def neg(self) -> "TruthTable":
        return TruthTable(self.m, self.one, self.zero)

    def nabla(self) -> "TruthTable":
        return TruthTable(self.m, self.zero, ~self.zero)

    def delta(self) -> "TruthTable":
        return TruthTable(self.m, ~self.one, self.one)

    def flip(self) -> "TruthTable":
        return TruthTable(self.m, self.zero, self.half)

    def clash(self, other: "TruthTable") -> np.ndarray:
        """Valuations where the two tables take the values 0 and 1"""
        self._check(other)
        return (self.zero & other.one) | (self.one & other.zero)

    def meet_partial(self, other: "TruthTable") -> Optional["TruthTable"]:
        """Pointwise intersection; None when undefined at some valuation"""
        if self.clash(other).any():
            return None
        return TruthTable(self.m, self.zero | other.zero, self.one | other.one)

    def below(self, other: "TruthTable") -> bool:
        """Pointwise inclusion: self # other = other"""
        return self.join(other) == other

    # Text format
    def to_text(self) -> str:
        return f"m={self.m}\n{self.word}"

    @classmethod
    def from_text(cls, text: str) -> "TruthTable":
        """
        Parse the two-line text format ("m=<arity>" then 3^m characters)

        Raises:
            ValueError: On a malformed header, bad characters or wrong length
        """
        lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
        if not lines or not lines[0].startswith("m="):
            raise ValueError("Truth table text must start with a line 'm=<arity>'")
        try:
            m = int(lines[0][2:])
        except ValueError:
            raise ValueError(f"Bad arity line {lines[0]!r}")
        word = "".join(lines[1:])
        if len(word) != 3 ** m:
            raise ValueError(f"Expected {3 ** m} entries for m={m}, got {len(word)}")
        return cls.from_word(word, m)


def _arity_of_length(length: int) -> int:
    m, size = 0, 1
    while size < length:
        m, size = m + 1, size * 3
    if size != length:
        raise PreconditionError(f"Table length {length} is not a power of 3")
    return m


def meet_table_fold(tables: List[TruthTable], m: int) -> Optional[TruthTable]:
    """Pointwise intersection of all tables, starting from the constant h; None if undefined"""
    result = TruthTable.constant(m, Trit.HALF)
    for table in tables:
        result = result.meet_partial(table)
        if result is None:
            return None
    return result
