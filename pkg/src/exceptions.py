"""Exception hierarchy shared by all layers"""
from typing import Iterable, Optional, Tuple


class CubicLogicError(Exception):
    """Base class for toolkit errors"""


class FormulaSyntaxError(CubicLogicError, ValueError):
    """Formula text does not conform to the grammar"""

    def __init__(self, message: str, position: int = 0, expected: Iterable[str] = ()):
        self.position = position
        self.expected: Tuple[str, ...] = tuple(sorted(set(expected)))
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class UnknownTokenError(FormulaSyntaxError):
    """Formula text contains a character sequence that is not a token"""


class ArityError(CubicLogicError, ValueError):
    """A variable index exceeds the arity in use"""


class IncompatibleTheoryError(CubicLogicError):
    """Operation requires a compatible premise set"""


class PreconditionError(CubicLogicError):
    """Operation called outside its precondition"""


class SignatureError(CubicLogicError):
    """Term or algebra does not match the expected signature"""


class AxiomFailureError(CubicLogicError):
    """Input algebra fails the axiom set it must satisfy"""

    def __init__(self, message: str, failure: Optional[object] = None):
        self.failure = failure
        super().__init__(message)


class AlgebraSizeError(CubicLogicError):
    """Algebra too large for the requested exhaustive procedure"""


class AlgebraFormatError(CubicLogicError, ValueError):
    """Malformed algebra text file"""


class FaceError(CubicLogicError, ValueError):
    """Malformed face, dimension mismatch or containment violation"""


class InvariantViolation(CubicLogicError):
    """An internal invariant that must always hold was found broken"""
