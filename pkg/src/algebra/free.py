"""Free RM-algebras - all truth tables of a fixed arity under the pointwise operations"""
import logging
from typing import Iterable, List

import numpy as np

from src.algebra.catalogue import power, zeta_rm
from src.algebra.finite_algebra import FiniteAlgebra
from src.config import Config
from src.exceptions import AlgebraSizeError
from src.semantics.truth_table import TruthTable
from src.trits import Trit
from src.trits.operations import DPAR_TABLE, JOIN_TABLE, MIN_TABLE

logger = logging.getLogger(__name__)

RM_TABLES = {
    name: np.array([[int(v) for v in row] for row in table], dtype=np.int8)
    for name, table in (("join", JOIN_TABLE), ("dpar", DPAR_TABLE), ("meet", MIN_TABLE))
}


class FreeRMAlgebra:
    """
    Free RM-algebra on m generators, realized as the 3^(3^m) truth tables of arity m

    Tables are handled as code vectors of length 3^m; an element index is
    the code vector read as a base-3 number, first valuation most significant.
    """

    def __init__(self, m: int):
        if m > Config.FREE_MAX_ARITY:
            raise AlgebraSizeError(f"Free algebra arity {m} exceeds CUBIC_FREE_MAX_ARITY")
        if m < 0:
            raise ValueError("Arity must be non-negative")
        self.m = m
        self.cells = 3 ** m
        self.size = 3 ** self.cells
        self._weights = 3 ** np.arange(self.cells - 1, -1, -1, dtype=np.int64)

    def index_of(self, table: TruthTable) -> int:
        if table.m != self.m:
            raise ValueError(f"Table arity {table.m} differs from {self.m}")
        return int(table.codes().astype(np.int64) @ self._weights)

    def table_at(self, index: int) -> TruthTable:
        codes = (index // self._weights) % 3
        return TruthTable.from_codes(self.m, codes)

    def generators(self) -> List[TruthTable]:
        """The coordinate tables X1..Xm"""
        return [TruthTable.coordinate(self.m, i) for i in range(1, self.m + 1)]

    def generated_by(self, tables: Iterable[TruthTable], chunk: int = 64) -> np.ndarray:
        """
        Indices of the tables reachable from the given ones and 0, h under #, d, &

        Semi-naive closure over code vectors; each round combines the new
        tables with every table found so far.
        """
        seen = np.zeros(self.size, dtype=bool)
        start = [TruthTable.constant(self.m, v).codes() for v in (Trit.ZERO, Trit.HALF)]
        start += [t.codes() for t in tables]
        frontier = np.unique(np.stack(start).astype(np.int64) @ self._weights)
        seen[frontier] = True

        while frontier.size:
            new = ((frontier[:, None] // self._weights) % 3).astype(np.int8)
            known = ((np.flatnonzero(seen)[:, None] // self._weights) % 3).astype(np.int8)
            produced = []
            for op in RM_TABLES.values():
                for begin in range(0, len(new), chunk):
                    block = new[begin:begin + chunk]
                    for left, right in ((block[:, None, :], known[None, :, :]),
                                        (known[:, None, :], block[None, :, :])):
                        produced.append((op[left, right].astype(np.int64) @ self._weights).ravel())
            candidates = np.unique(np.concatenate(produced))
            frontier = candidates[~seen[candidates]]
            seen[frontier] = True
            logger.debug(f"Free closure at m={self.m}: {int(seen.sum())} tables")
        return np.flatnonzero(seen)

    def as_finite_algebra(self) -> FiniteAlgebra:
        """
        The algebra with explicit tables (m <= 1)

        Raises:
            AlgebraSizeError: For m = 2, whose tables would have 3^18 entries
        """
        if self.m > 1:
            raise AlgebraSizeError("Free algebra tables are materialized only for m <= 1")
        return power(zeta_rm(), self.cells, f"free_rm({self.m})")


def free_rm(m: int) -> FreeRMAlgebra:
    return FreeRMAlgebra(m)
