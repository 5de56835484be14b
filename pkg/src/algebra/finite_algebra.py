"""Finite Algebra - explicit carrier with named constant and operation tables"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import numpy as np

from src.exceptions import AlgebraFormatError, SignatureError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Signature:
    """Names of the constants, unary and binary operations of a variety"""

    name: str
    constants: Tuple[str, ...]
    unary: Tuple[str, ...]
    binary: Tuple[str, ...]

    @property
    def operations(self) -> Tuple[str, ...]:
        return self.constants + self.unary + self.binary


RM_SIGNATURE = Signature("rm", ("zero", "half"), (), ("join", "dpar", "meet"))
POST_SIGNATURE = Signature("post", ("zero", "half", "one"), ("neg", "nabla"), ("vee", "meet"))
BOOLEAN_SIGNATURE = Signature("boolean", ("zero", "one"), ("neg",), ("vee", "meet"))

SIGNATURES = {s.name: s for s in (RM_SIGNATURE, POST_SIGNATURE, BOOLEAN_SIGNATURE)}


def _frozen_table(values, shape, name: str, size: int) -> np.ndarray:
    table = np.asarray(values, dtype=np.int64)
    if table.shape != shape:
        raise AlgebraFormatError(f"Table {name} has shape {table.shape}, expected {shape}")
    if table.size and (table.min() < 0 or table.max() >= size):
        raise AlgebraFormatError(f"Table {name} has entries outside the carrier 0..{size - 1}")
    table = table.copy()
    table.setflags(write=False)
    return table


@dataclass
class FiniteAlgebra:
    """
    Algebra on the carrier {0, ..., size-1}

    Constants map to carrier indices; unary tables have shape (size,),
    binary tables (size, size) indexed [x, y].
    """

    size: int
    constants: Dict[str, int] = field(default_factory=dict)
    unary: Dict[str, np.ndarray] = field(default_factory=dict)
    binary: Dict[str, np.ndarray] = field(default_factory=dict)
    labels: Optional[List[str]] = None
    name: str = ""

    def __post_init__(self):
        if self.size < 1:
            raise AlgebraFormatError(f"Carrier must be nonempty, got size {self.size}")
        for name, index in self.constants.items():
            if not 0 <= int(index) < self.size:
                raise AlgebraFormatError(f"Constant {name} = {index} outside the carrier")
        self.constants = {name: int(index) for name, index in self.constants.items()}
        self.unary = {
            name: _frozen_table(t, (self.size,), name, self.size) for name, t in self.unary.items()
        }
        self.binary = {
            name: _frozen_table(t, (self.size, self.size), name, self.size)
            for name, t in self.binary.items()
        }
        if self.labels is not None and len(self.labels) != self.size:
            raise AlgebraFormatError(f"Expected {self.size} labels, got {len(self.labels)}")

    @property
    def operation_names(self) -> Tuple[str, ...]:
        return tuple(self.constants) + tuple(self.unary) + tuple(self.binary)

    def label(self, element: int) -> str:
        return self.labels[element] if self.labels else str(element)

    def has(self, signature: Signature) -> bool:
        return (
            set(signature.constants) <= set(self.constants)
            and set(signature.unary) <= set(self.unary)
            and set(signature.binary) <= set(self.binary)
        )

    def require(self, signature: Signature) -> "FiniteAlgebra":
        """
        Raises:
            SignatureError: If an operation of the signature is missing
        """
        missing = [
            name
            for name in signature.operations
            if name not in self.constants and name not in self.unary and name not in self.binary
        ]
        if missing:
            raise SignatureError(
                f"Algebra {self.name or '<unnamed>'} lacks {signature.name} operations: {', '.join(missing)}"
            )
        return self

    def restricted(self, signature: Signature, name: Optional[str] = None) -> "FiniteAlgebra":
        """Reduct keeping exactly the operations of the signature"""
        self.require(signature)
        return FiniteAlgebra(
            self.size,
            {n: self.constants[n] for n in signature.constants},
            {n: self.unary[n] for n in signature.unary},
            {n: self.binary[n] for n in signature.binary},
            self.labels,
            name or self.name,
        )

    def same_tables(self, other: "FiniteAlgebra") -> bool:
        """Identical carrier size, constants and operation tables"""
        return (
            self.size == other.size
            and self.constants == other.constants
            and self.unary.keys() == other.unary.keys()
            and self.binary.keys() == other.binary.keys()
            and all(np.array_equal(t, other.unary[n]) for n, t in self.unary.items())
            and all(np.array_equal(t, other.binary[n]) for n, t in self.binary.items())
        )

    def with_table(self, operation: str, table) -> "FiniteAlgebra":
        """Copy with one unary or binary table replaced"""
        unary, binary = dict(self.unary), dict(self.binary)
        if operation in unary:
            unary[operation] = table
        elif operation in binary:
            binary[operation] = table
        else:
            raise SignatureError(f"No operation named {operation}")
        return FiniteAlgebra(self.size, dict(self.constants), unary, binary, self.labels, self.name)

    # Text format
    def to_text(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        lines.append(f"carrier: {self.size}")
        if self.labels:
            lines.append("labels: " + " ".join(self.labels))
        for name, index in self.constants.items():
            lines.append(f"const {name} = {index}")
        for name, table in self.unary.items():
            lines.append(f"unop {name}: " + " ".join(str(int(v)) for v in table))
        for name, table in self.binary.items():
            lines.append(f"binop {name}: " + " ".join(str(int(v)) for v in table.ravel()))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str, name: str = "") -> "FiniteAlgebra":
        """
        Parse the algebra text format

        Lines: `carrier: k`, optional `labels: ...`, `const <name> = <index>`,
        `unop <name>: k entries`, `binop <name>: k*k entries row-major`.
        Entries may continue on following lines; `#` starts a comment.

        Raises:
            AlgebraFormatError: On any malformed line or table
        """
        size: Optional[int] = None
        labels = None
        constants: Dict[str, int] = {}
        pending: Dict[str, Tuple[str, List[int]]] = {}
        current: Optional[str] = None

        for number, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                if line.startswith("carrier:"):
                    size = int(line.split(":", 1)[1])
                    current = None
                elif line.startswith("labels:"):
                    labels = line.split(":", 1)[1].split()
                    current = None
                elif line.startswith("const "):
                    left, right = line[len("const "):].split("=", 1)
                    constants[left.strip()] = int(right)
                    current = None
                elif line.startswith(("unop ", "binop ")):
                    kind, rest = line.split(" ", 1)
                    op_name, entries = rest.split(":", 1)
                    current = op_name.strip()
                    pending[current] = (kind, [int(v) for v in entries.split()])
                elif current is not None:
                    pending[current][1].extend(int(v) for v in line.split())
                else:
                    raise ValueError("unrecognized line")
            except ValueError as e:
                raise AlgebraFormatError(f"Line {number}: {raw.strip()!r}: {e}") from None

        if size is None:
            raise AlgebraFormatError("Missing 'carrier: k' line")
        unary, binary = {}, {}
        for op_name, (kind, entries) in pending.items():
            if kind == "unop":
                unary[op_name] = np.array(entries, dtype=np.int64)
            else:
                if len(entries) != size * size:
                    raise AlgebraFormatError(
                        f"binop {op_name} needs {size * size} entries, got {len(entries)}"
                    )
                binary[op_name] = np.array(entries, dtype=np.int64).reshape(size, size)
        algebra = cls(size, constants, unary, binary, labels, name)
        logger.debug(f"Read algebra {name or '<unnamed>'} with {size} elements")
        return algebra
