"""Valuation - an assignment of trits to X1..Xm, identified with its base-3 index"""
import re
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from src.exceptions import ArityError
from src.trits import Trit

_ASSIGNMENT = re.compile(r"X([1-9][0-9]*)=(0|h|1/2|1)")


@dataclass(frozen=True, order=True)
class Valuation:
    """
    Valuation of arity m

    index = sum of digit(Xi) * 3^(m - i), X1 most significant, with the
    digit map 0 -> 0, h -> 1, 1 -> 2.
    """

    m: int
    index: int

    def __post_init__(self):
        if self.m < 0:
            raise ArityError(f"Arity must be non-negative, got {self.m}")
        if not 0 <= self.index < 3 ** self.m:
            raise ArityError(f"Valuation index {self.index} out of range for arity {self.m}")

    @property
    def digits(self) -> Tuple[Trit, ...]:
        result = []
        rest = self.index
        for _ in range(self.m):
            rest, digit = divmod(rest, 3)
            result.append(Trit(digit))
        return tuple(reversed(result))

    def __getitem__(self, variable_index: int) -> Trit:
        """Value of X<variable_index>"""
        if not 1 <= variable_index <= self.m:
            raise ArityError(f"Variable X{variable_index} exceeds arity {self.m}")
        return Trit((self.index // 3 ** (self.m - variable_index)) % 3)

    @classmethod
    def from_digits(cls, digits) -> "Valuation":
        index = 0
        for digit in digits:
            index = index * 3 + int(Trit(digit))
        return cls(len(digits), index)

    @classmethod
    def all(cls, m: int) -> Iterator["Valuation"]:
        """Every valuation of arity m in index order"""
        for index in range(3 ** m):
            yield cls(m, index)

    @classmethod
    def parse(cls, text: str, m: Optional[int] = None) -> "Valuation":
        """
        Parse a valuation

        Accepts a trit word ("0h1", "" for arity 0) or assignments
        ("X1=0 X2=h"). With assignments, unlisted variables up to m are 0.

        Raises:
            ValueError: On malformed text
            ArityError: If the text does not fit arity m
        """
        text = text.strip()
        if "=" not in text:
            digits = Trit.parse_word(text.replace(" ", ""))
            if m is not None and len(digits) != m:
                raise ArityError(f"Valuation {text!r} has {len(digits)} trits, expected {m}")
            return cls.from_digits(digits)

        assigned: Dict[int, Trit] = {}
        for part in text.replace(",", " ").split():
            match = _ASSIGNMENT.fullmatch(part)
            if not match:
                raise ValueError(f"Bad assignment {part!r}; expected X<k>=<trit>")
            assigned[int(match.group(1))] = Trit.parse(match.group(2))
        arity = max(assigned) if m is None else m
        if max(assigned) > arity:
            raise ArityError(f"Assignment to X{max(assigned)} exceeds arity {arity}")
        return cls.from_digits([assigned.get(i, Trit.ZERO) for i in range(1, arity + 1)])

    @property
    def word(self) -> str:
        return Trit.word(self.digits)

    def to_text(self) -> str:
        """Assignment text, e.g. "X1=0 X2=h" """
        return " ".join(f"X{i}={digit.symbol}" for i, digit in enumerate(self.digits, start=1))

    def to_json(self) -> List[str]:
        return [digit.symbol for digit in self.digits]

    def __str__(self) -> str:
        return self.to_text()
