"""Trit operations - table-driven basic, derived and partial operations on {0, 1/2, 1}"""
from typing import Dict, Optional, Tuple
from src.trits.trit import Trit, TRITS

Z, H, O = Trit.ZERO, Trit.HALF, Trit.ONE

# Rows are x, columns are y
JOIN_TABLE: Tuple[Tuple[Trit, ...], ...] = (
    (Z, H, H),
    (H, H, H),
    (H, H, O),
)

DPAR_TABLE: Tuple[Tuple[Trit, ...], ...] = (
    (Z, H, Z),
    (O, H, Z),
    (O, H, O),
)

MIN_TABLE: Tuple[Tuple[Trit, ...], ...] = (
    (Z, Z, Z),
    (Z, H, H),
    (Z, H, O),
)

MAX_TABLE: Tuple[Tuple[Trit, ...], ...] = (
    (Z, H, O),
    (H, H, O),
    (O, O, O),
)

# None marks the two undefined cells
PARTIAL_MEET_TABLE: Tuple[Tuple[Optional[Trit], ...], ...] = (
    (Z, Z, None),
    (Z, H, O),
    (None, O, O),
)

NEG_TABLE = (O, H, Z)
NABLA_TABLE = (Z, O, O)
DELTA_TABLE = (Z, Z, O)


class TritOps:
    """Basic and derived operations on single trits"""

    @staticmethod
    def join(x: Trit, y: Trit) -> Trit:
        """Smallest face containing x and y (the printed join table)"""
        return JOIN_TABLE[x][y]

    @staticmethod
    def dpar(x: Trit, y: Trit) -> Trit:
        """Antipodal operation: the antipodal of y in x join y"""
        return DPAR_TABLE[x][y]

    @staticmethod
    def meet(x: Trit, y: Trit) -> Trit:
        """Lattice meet, min(x, y)"""
        return MIN_TABLE[x][y]

    @staticmethod
    def vee(x: Trit, y: Trit) -> Trit:
        """Lattice join, max(x, y)"""
        return MAX_TABLE[x][y]

    @staticmethod
    def neg(x: Trit) -> Trit:
        """1 - x"""
        return NEG_TABLE[x]

    @staticmethod
    def nabla(x: Trit) -> Trit:
        """min(1, 2x)"""
        return NABLA_TABLE[x]

    @staticmethod
    def delta(x: Trit) -> Trit:
        """max(0, 2x - 1)"""
        return DELTA_TABLE[x]

    @staticmethod
    def flip(x: Trit) -> Trit:
        """flip(x) = dpar(x, 0) join dpar(dpar(0, x), 0)"""
        return TritOps.join(TritOps.dpar(x, Z), TritOps.dpar(TritOps.dpar(Z, x), Z))

    @staticmethod
    def meet_partial(x: Trit, y: Trit) -> Optional[Trit]:
        """Rota-Metropolis intersection; None exactly when {x, y} = {0, 1}"""
        return PARTIAL_MEET_TABLE[x][y]

    @staticmethod
    def below(x: Trit, y: Trit) -> bool:
        """Inclusion order: x below y iff x join y = y"""
        return TritOps.join(x, y) == y

    @staticmethod
    def sharper(x: Trit, y: Trit) -> bool:
        """Sharpening order: x <= y <= 1-y or x >= y >= 1-y"""
        not_y = TritOps.neg(y)
        return (x <= y <= not_y) or (x >= y >= not_y)

    @staticmethod
    def numeric_leq(x: Trit, y: Trit) -> bool:
        return x <= y

    @staticmethod
    def compatible(x: Trit, y: Trit) -> bool:
        """No {0, 1} clash"""
        return {x, y} != {Z, O}

    @staticmethod
    def tables_as_grids() -> Dict[str, Tuple[Tuple[str, ...], ...]]:
        """The three printed tables as grids of symbols ("u" for undefined)"""
        def render(table):
            return tuple(
                tuple("u" if cell is None else cell.symbol for cell in row) for row in table
            )

        return {
            "join": render(JOIN_TABLE),
            "dpar": render(DPAR_TABLE),
            "meet_partial": render(PARTIAL_MEET_TABLE),
        }

    @staticmethod
    def pairs():
        """All 9 ordered pairs of trits"""
        return [(x, y) for x in TRITS for y in TRITS]
