"""Exception hierarchy for the algebra kernel.

Every error carries a stable ``code`` so the CLI can emit a machine-readable
error object.
"""

from typing import Optional


class AlgebraError(ValueError):
    """Base class for all domain errors.

    Attributes:
        code: Stable error name used in JSON error objects
        line: Input line number when raised while reading a file
    """

    code = "AlgebraError"

    def __init__(self, message: str, line: Optional[int] = None):
        super().__init__(message)
        self.message = message
        self.line = line

    def to_dict(self) -> dict:
        """Convert error to dictionary for JSON serialization."""
        result = {
            'code': self.code,
            'message': self.message,
        }
        if self.line is not None:
            result['line'] = self.line
        return result


class NotPrime(AlgebraError):
    code = "NotPrime"


class Reducible(AlgebraError):
    code = "Reducible"


class ExtensionRequired(AlgebraError):
    code = "ExtensionRequired"


class DivisionByZero(AlgebraError, ZeroDivisionError):
    code = "DivisionByZero"


class FieldMismatch(AlgebraError):
    code = "FieldMismatch"


class ArityMismatch(AlgebraError):
    code = "ArityMismatch"


class ContextMismatch(AlgebraError):
    code = "ContextMismatch"


class ExponentOverflow(AlgebraError):
    code = "ExponentOverflow"


class NotLinear(AlgebraError):
    code = "NotLinear"


class SingularSubstitution(AlgebraError):
    code = "SingularSubstitution"


class NonHomogeneousInput(AlgebraError):
    code = "NonHomogeneousInput"


class NotArtinian(AlgebraError):
    code = "NotArtinian"


class WrongTermOrder(AlgebraError):
    code = "WrongTermOrder"


class ZeroCandidate(AlgebraError):
    code = "ZeroCandidate"


class ParseError(AlgebraError):
    code = "ParseError"
