"""Invertible linear changes of variables between two ring contexts."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from src.lib import field_linalg
from src.models.errors import ArityMismatch, ContextMismatch, FieldMismatch, NotLinear
from src.models.polynomial import Polynomial
from src.models.ring import RingContext

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LinearSubstitution:
    """Maps each source variable to a linear form in the target variables.

    Row k of ``matrix`` holds the coefficients (field codes) of the image of
    source variable k in the target variables.

    Attributes:
        source: Ring the substituted polynomials come from
        target: Ring the images live in
        matrix: n x n coefficient codes, one row per source variable
        inverse_matrix: Invertibility witness; matrix * inverse_matrix = identity
    """

    source: RingContext
    target: RingContext
    matrix: Tuple[Tuple[int, ...], ...]
    inverse_matrix: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    def __post_init__(self):
        """Validate shapes and compute the inverse."""
        if self.source.field != self.target.field:
            raise FieldMismatch(
                f"Source and target fields differ: "
                f"{self.source.field.describe()} vs {self.target.field.describe()}"
            )
        if self.source.n != self.target.n:
            raise ArityMismatch(f"Cannot substitute {self.source.n} variables by {self.target.n}")
        n = self.source.n
        matrix = tuple(tuple(row) for row in self.matrix)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ArityMismatch(f"Substitution matrix must be {n} x {n}")
        object.__setattr__(self, 'matrix', matrix)
        inverse = field_linalg.inverse(self.source.field, matrix)
        object.__setattr__(self, 'inverse_matrix', tuple(tuple(row) for row in inverse))

    @classmethod
    def from_images(cls, source: RingContext, target: RingContext,
                    images: Sequence[Polynomial]) -> 'LinearSubstitution':
        """Build from the image of every source variable.

        Raises:
            NotLinear: an image is not a linear form
            SingularSubstitution: the images are linearly dependent
        """
        rows = []
        for image in images:
            if image.ring != target:
                raise ContextMismatch("Images must live in the target ring")
            if not image.is_linear():
                raise NotLinear(f"Substitution images must be linear forms, got: {image}")
            rows.append(tuple(image.coefficient_codes()))
        return cls(source, target, tuple(rows))

    @classmethod
    def identity(cls, ring: RingContext) -> 'LinearSubstitution':
        n = ring.n
        return cls(ring, ring, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def images(self) -> List[Polynomial]:
        """Images of the source variables as polynomials in the target ring."""
        return [Polynomial(self.target, {self.target.variable_code(j): c for j, c in enumerate(row)})
                for row in self.matrix]

    def inverse(self) -> 'LinearSubstitution':
        return LinearSubstitution(self.target, self.source, self.inverse_matrix)

    def apply_to_form(self, form: Polynomial) -> Polynomial:
        """Substitute into a linear form via the matrix (no expansion)."""
        if form.ring != self.source:
            raise ContextMismatch("Form does not live in the source ring")
        coefficients = form.coefficient_codes()
        add = self.source.field.add_rows
        mul = self.source.field.mul_rows
        out = [0] * self.target.n
        for k, c in enumerate(coefficients):
            if c:
                for j, x in enumerate(self.matrix[k]):
                    out[j] = add[out[j]][mul[c][x]]
        return Polynomial(self.target, {self.target.variable_code(j): c for j, c in enumerate(out)})

    def __call__(self, f: Polynomial) -> Polynomial:
        return substitute(f, self)


def substitute(f: Polynomial, s: LinearSubstitution) -> Polynomial:
    """Replace every source variable of f by its image under s.

    Expands by Horner's rule in the first variable, recursing on the
    coefficient polynomials in the remaining variables.

    Raises:
        ContextMismatch: f does not live in s.source
    """
    if f.ring != s.source:
        raise ContextMismatch(
            f"Polynomial ring {f.ring.describe_variables()} does not match "
            f"substitution source {s.source.describe_variables()}"
        )
    if f.is_zero():
        return Polynomial.zero(s.target)
    if f.is_homogeneous() and f.degree == 1:
        return s.apply_to_form(f)

    source = s.source
    exponent_terms = [(source.decode(m), c) for m, c in f.as_dict().items()]
    return _horner(exponent_terms, 0, s.images(), s.target)


def _horner(terms: List[Tuple[Tuple[int, ...], int]], k: int,
            images: List[Polynomial], target: RingContext) -> Polynomial:
    """Substitute terms that only involve source variables k, k+1, ..."""
    if k == len(images):
        constant = 0
        add = target.field.add_rows
        for _, c in terms:
            constant = add[constant][c]
        return Polynomial(target, {target.one(): constant})

    by_power: Dict[int, List[Tuple[Tuple[int, ...], int]]] = {}
    for exponents, c in terms:
        by_power.setdefault(exponents[k], []).append((exponents, c))

    top = max(by_power)
    result = Polynomial.zero(target)
    for power in range(top, -1, -1):
        if power != top:
            result = result * images[k]
        group = by_power.get(power)
        if group:
            result = result + _horner(group, k + 1, images, target)
    return result
