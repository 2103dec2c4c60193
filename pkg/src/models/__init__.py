"""Value types of the algebra kernel and the reports built from it."""

from .errors import AlgebraError
from .field import FieldElement, FieldSpec, make_field
from .polynomial import Polynomial
from .ring import RingContext, TermOrder

__all__ = ["AlgebraError", "FieldElement", "FieldSpec", "make_field", "Polynomial",
           "RingContext", "TermOrder"]
