"""Faces of the n-cube - (A0, A1) pairs stored as trit words"""
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, FrozenSet, Iterable, List, Tuple

from src.exceptions import FaceError
from src.trits import TRITS, Trit


@dataclass(frozen=True, order=True)
class Vertex:
    """A 0/1 point of the n-cube"""

    coordinates: Tuple[int, ...]

    def __post_init__(self):
        if any(c not in (0, 1) for c in self.coordinates):
            raise FaceError(f"Vertex coordinates must be 0 or 1: {self.coordinates}")

    @property
    def n(self) -> int:
        return len(self.coordinates)

    def distance(self, other: "Vertex") -> int:
        """Edge distance (number of differing coordinates)"""
        if other.n != self.n:
            raise FaceError(f"Dimension mismatch: {self.n} vs {other.n}")
        return sum(a != b for a, b in zip(self.coordinates, other.coordinates))

    def as_face(self) -> "Face":
        return Face(tuple(Trit.ONE if c else Trit.ZERO for c in self.coordinates))

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coordinates) + ")"


@dataclass(frozen=True, order=True)
class Face:
    """
    Nonempty face of the n-cube

    Coordinate i is 0 when i is in A0, 1 when i is in A1, and h (free)
    otherwise. The word is the primary representation.
    """

    trits: Tuple[Trit, ...]

    def __post_init__(self):
        object.__setattr__(self, "trits", tuple(Trit(t) for t in self.trits))

    # Construction
    @classmethod
    def from_word(cls, word: str) -> "Face":
        """
        Raises:
            FaceError: On characters other than 0, h, 1
        """
        try:
            return cls(Trit.parse_word(word.strip()))
        except ValueError as e:
            raise FaceError(f"Bad face word {word!r}: {e}") from None

    @classmethod
    def from_sets(cls, n: int, zeros: Iterable[int], ones: Iterable[int]) -> "Face":
        """
        Face from its coordinate sets (1-based)

        Raises:
            FaceError: If the sets overlap or leave 1..n
        """
        zeros, ones = frozenset(zeros), frozenset(ones)
        if zeros & ones:
            raise FaceError(f"A0 and A1 must be disjoint, both contain {sorted(zeros & ones)}")
        if any(not 1 <= i <= n for i in zeros | ones):
            raise FaceError(f"Coordinates must lie in 1..{n}")
        return cls(
            tuple(
                Trit.ZERO if i in zeros else Trit.ONE if i in ones else Trit.HALF
                for i in range(1, n + 1)
            )
        )

    # Views
    @property
    def n(self) -> int:
        return len(self.trits)

    @property
    def word(self) -> str:
        return Trit.word(self.trits)

    @property
    def zeros(self) -> FrozenSet[int]:
        """A0"""
        return frozenset(i for i, t in enumerate(self.trits, start=1) if t is Trit.ZERO)

    @property
    def ones(self) -> FrozenSet[int]:
        """A1"""
        return frozenset(i for i, t in enumerate(self.trits, start=1) if t is Trit.ONE)

    @property
    def dimension(self) -> int:
        return sum(t is Trit.HALF for t in self.trits)

    @property
    def is_vertex(self) -> bool:
        return self.dimension == 0

    def vertices(self) -> List[Vertex]:
        """All 0/1 completions of the free coordinates, in lexicographic order"""
        options = [(0, 1) if t is Trit.HALF else (1 if t is Trit.ONE else 0,) for t in self.trits]
        return [Vertex(coords) for coords in itertools.product(*options)]

    def center(self) -> Tuple[Fraction, ...]:
        return tuple(t.fraction for t in self.trits)

    def to_json(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "A0": sorted(self.zeros),
            "A1": sorted(self.ones),
            "word": self.word,
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any]) -> "Face":
        if "word" in data:
            face = cls.from_word(data["word"])
            if "n" in data and data["n"] != face.n:
                raise FaceError(f"Word {data['word']!r} does not have n={data['n']}")
            return face
        return cls.from_sets(data["n"], data.get("A0", ()), data.get("A1", ()))

    def __str__(self) -> str:
        return self.word


def all_faces(n: int) -> List[Face]:
    """The 3^n nonempty faces of the n-cube in word-index order"""
    return [Face(word) for word in itertools.product(TRITS, repeat=n)]


def origin(n: int) -> Face:
    """The all-zero vertex"""
    return Face((Trit.ZERO,) * n)


def whole(n: int) -> Face:
    """The cube itself"""
    return Face((Trit.HALF,) * n)


def ones(n: int) -> Face:
    """The all-one vertex"""
    return Face((Trit.ONE,) * n)
