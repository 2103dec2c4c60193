"""Polynomials over a ring context.

A polynomial stores ``{monomial code: coefficient code}`` with no zero
coefficients. The descending term list is computed on demand and cached;
polynomials are never mutated after construction.
"""

import math
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from src.models.errors import ContextMismatch, ExponentOverflow, FieldMismatch, NotLinear
from src.models.field import FieldElement
from src.models.ring import EXPONENT_LIMIT, Monomial, RingContext, compositions

Scalar = Union[FieldElement, int]


class Polynomial:
    """A polynomial in ``ring`` with canonical (sorted, nonzero) terms.

    Attributes:
        ring: Ring context the polynomial lives in
    """

    __slots__ = ('ring', '_terms', '_sorted')

    def __init__(self, ring: RingContext, terms: Optional[Mapping[int, int]] = None):
        self.ring = ring
        self._terms: Dict[int, int] = {m: c for m, c in (terms or {}).items() if c}
        self._sorted: Optional[List[Tuple[int, int]]] = None

    @classmethod
    def _wrap(cls, ring: RingContext, terms: Dict[int, int]) -> 'Polynomial':
        """Adopt a dict that is already free of zero coefficients."""
        poly = cls.__new__(cls)
        poly.ring = ring
        poly._terms = terms
        poly._sorted = None
        return poly

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, ring: RingContext) -> 'Polynomial':
        return cls._wrap(ring, {})

    @classmethod
    def constant(cls, ring: RingContext, c: Scalar) -> 'Polynomial':
        return cls(ring, {ring.one(): _scalar_code(ring, c)})

    @classmethod
    def variable(cls, ring: RingContext, name: Union[str, int]) -> 'Polynomial':
        index = name if isinstance(name, int) else ring.index(name)
        return cls._wrap(ring, {ring.variable_code(index): 1})

    @classmethod
    def monomial(cls, ring: RingContext, code: int, c: Scalar = 1) -> 'Polynomial':
        return cls(ring, {code: _scalar_code(ring, c)})

    @classmethod
    def linear_form(cls, ring: RingContext, coefficients: Sequence[Scalar]) -> 'Polynomial':
        """Build sum(c_i * x_i) from one coefficient per variable."""
        if len(coefficients) != ring.n:
            raise ValueError(f"Expected {ring.n} coefficients, got {len(coefficients)}")
        return cls(ring, {
            ring.variable_code(i): _scalar_code(ring, c) for i, c in enumerate(coefficients)
        })

    @classmethod
    def from_terms(cls, ring: RingContext,
                   terms: Iterable[Tuple[Union[Monomial, Sequence[int]], Scalar]]) -> 'Polynomial':
        """Build from (monomial or exponent vector, coefficient) pairs."""
        add = ring.field.add_rows
        result: Dict[int, int] = {}
        for monomial, c in terms:
            exponents = monomial.exponents if isinstance(monomial, Monomial) else monomial
            code = ring.encode(exponents)
            result[code] = add[result.get(code, 0)][_scalar_code(ring, c)]
        return cls(ring, result)

    # ------------------------------------------------------------------
    # Inspection
    # ------------------------------------------------------------------

    def term_codes(self) -> List[Tuple[int, int]]:
        """(monomial code, coefficient code) pairs, descending in the term order."""
        if self._sorted is None:
            self._sorted = sorted(self._terms.items(), reverse=True)
        return self._sorted

    def as_dict(self) -> Dict[int, int]:
        """A copy of the code mapping."""
        return dict(self._terms)

    @property
    def terms(self) -> List[Tuple[Monomial, FieldElement]]:
        ring = self.ring
        return [(ring.monomial(m), ring.field.element_from_code(c)) for m, c in self.term_codes()]

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, code: int) -> int:
        return self._terms.get(code, 0)

    @property
    def leading_monomial(self) -> int:
        """Code of the leading monomial; ValueError on zero."""
        if not self._terms:
            raise ValueError("The zero polynomial has no leading monomial")
        if self._sorted is not None:
            return self._sorted[0][0]
        return max(self._terms)

    @property
    def leading_coefficient(self) -> int:
        return self._terms[self.leading_monomial]

    @property
    def leading_term(self) -> Tuple[Monomial, FieldElement]:
        lm = self.leading_monomial
        return self.ring.monomial(lm), self.ring.field.element_from_code(self._terms[lm])

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(self.ring.degree(m) for m in self._terms)

    def is_homogeneous(self) -> bool:
        degrees = {self.ring.degree(m) for m in self._terms}
        return len(degrees) <= 1

    def coefficients(self) -> List[FieldElement]:
        """Coefficient vector of a linear form."""
        if not self.is_linear():
            raise NotLinear(f"Not a linear form: {self}")
        ring = self.ring
        return [ring.field.element_from_code(self._terms.get(ring.variable_code(i), 0))
                for i in range(ring.n)]

    def coefficient_codes(self) -> List[int]:
        return [c.code for c in self.coefficients()]

    def is_linear(self) -> bool:
        """True for nonzero homogeneous polynomials of degree 1."""
        return bool(self._terms) and all(self.ring.degree(m) == 1 for m in self._terms)

    def max_exponents(self) -> Tuple[int, ...]:
        ring = self.ring
        result = [0] * ring.n
        for m in self._terms:
            for i, e in enumerate(ring.decode(m)):
                if e > result[i]:
                    result[i] = e
        return tuple(result)

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _check(self, other: 'Polynomial') -> None:
        if other.ring != self.ring:
            raise ContextMismatch(
                f"Polynomials live in different rings: "
                f"{self.ring.describe_variables()} over {self.ring.field.describe()} vs "
                f"{other.ring.describe_variables()} over {other.ring.field.describe()}"
            )

    def _coerce(self, other) -> Optional['Polynomial']:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.ring, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._combine(other, self.ring.field.neg(1))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def _combine(self, other: 'Polynomial', factor: int) -> 'Polynomial':
        """self + factor * other."""
        field_spec = self.ring.field
        add = field_spec.add_rows
        row = field_spec.mul_rows[factor]
        result = dict(self._terms)
        for m, c in other._terms.items():
            old = result.get(m)
            if old is None:
                result[m] = row[c]
            else:
                new = add[old][row[c]]
                if new:
                    result[m] = new
                else:
                    del result[m]
        return Polynomial._wrap(self.ring, result)

    def __neg__(self) -> 'Polynomial':
        return self.scale_code(self.ring.field.neg(1))

    def scale(self, c: Scalar) -> 'Polynomial':
        """Multiply by a field scalar (an integer is read as its image in F_p)."""
        return self.scale_code(_scalar_code(self.ring, c))

    def scale_code(self, code: int) -> 'Polynomial':
        """Multiply by the field element with the given code."""
        if not code:
            return Polynomial.zero(self.ring)
        row = self.ring.field.mul_rows[code]
        return Polynomial._wrap(self.ring, {m: row[v] for m, v in self._terms.items()})

    def mul_monomial(self, code: int, c: int = 1) -> 'Polynomial':
        """Multiply by the term c * monomial(code)."""
        if not c or not self._terms:
            return Polynomial.zero(self.ring)
        if self.degree + self.ring.degree(code) > EXPONENT_LIMIT:
            self._check_product_exponents(self.max_exponents(), self.ring.decode(code))
        row = self.ring.field.mul_rows[c]
        return Polynomial._wrap(self.ring, {m + code: row[v] for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check(other)
        if not self._terms or not other._terms:
            return Polynomial.zero(self.ring)
        if self.degree + other.degree > EXPONENT_LIMIT:
            self._check_product_exponents(self.max_exponents(), other.max_exponents())

        field_spec = self.ring.field
        add = field_spec.add_rows
        mul = field_spec.mul_rows
        result: Dict[int, int] = {}
        for m1, c1 in self._terms.items():
            row = mul[c1]
            for m2, c2 in other._terms.items():
                m = m1 + m2
                c = row[c2]
                old = result.get(m)
                if old is None:
                    result[m] = c
                else:
                    new = add[old][c]
                    if new:
                        result[m] = new
                    else:
                        del result[m]
        return Polynomial._wrap(self.ring, result)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    @staticmethod
    def _check_product_exponents(e1: Sequence[int], e2: Sequence[int]) -> None:
        for a, b in zip(e1, e2):
            if a + b > EXPONENT_LIMIT:
                raise ExponentOverflow(f"Exponent {a + b} exceeds the limit {EXPONENT_LIMIT}")

    def __pow__(self, exponent: int) -> 'Polynomial':
        if exponent < 0:
            raise ValueError(f"Negative exponent: {exponent}")
        result = Polynomial.constant(self.ring, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def monic(self) -> 'Polynomial':
        """Scale so the leading coefficient is 1 (zero stays zero)."""
        if not self._terms:
            return self
        lc = self.leading_coefficient
        if lc == 1:
            return self
        return self.scale_code(self.ring.field.inv(lc))

    # ------------------------------------------------------------------
    # Comparison and text
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self._terms.items())))

    def __str__(self) -> str:
        from src.lib.polynomial_text import format_polynomial
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _scalar_code(ring: RingContext, c: Scalar) -> int:
    if isinstance(c, FieldElement):
        if c.field != ring.field:
            raise FieldMismatch(f"Expected {ring.field.describe()}, got {c.field.describe()}")
        return c.code
    if isinstance(c, int):
        return ring.field.from_int(c)
    raise TypeError(f"Not a field scalar: {c!r}")


def power_sums(forms: Sequence[Polynomial], exponents: Sequence[int]) -> List[Polynomial]:
    """Return ``sum(f**e for f in forms)`` for every e in ``exponents``.

    Each f**e is expanded by the multinomial theorem over the support of f.
    The coefficient power chains c**k (k up to max(exponents)) are built once
    per form and shared by all requested exponents.

    Raises:
        NotLinear: a form is not homogeneous of degree 1
        ContextMismatch: forms live in different rings
    """
    if not forms:
        raise ValueError("power_sums needs at least one form")
    ring = forms[0].ring
    field_spec = ring.field
    add = field_spec.add_rows
    mul = field_spec.mul_rows
    top = max(exponents)
    factorials = [math.factorial(k) for k in range(top + 1)]
    if top > EXPONENT_LIMIT:
        raise ExponentOverflow(f"Exponent {top} exceeds the limit {EXPONENT_LIMIT}")

    sums: List[Dict[int, int]] = [dict() for _ in exponents]
    for f in forms:
        if f.ring != ring:
            raise ContextMismatch("All forms must share one ring")
        if not f.is_linear():
            raise NotLinear(f"Power sums need linear forms, got: {f}")

        support = f.term_codes()
        variables = [m for m, _ in support]
        chains = []
        for _, c in support:
            chain = [1]
            for _ in range(top):
                chain.append(mul[chain[-1]][c])
            chains.append(chain)

        for target, e in zip(sums, exponents):
            for split in compositions(e, len(support)):
                multinomial = factorials[e]
                for k in split:
                    multinomial //= factorials[k]
                coef = field_spec.from_int(multinomial)
                if not coef:
                    continue
                code = 0
                for var_code, chain, k in zip(variables, chains, split):
                    coef = mul[coef][chain[k]]
                    code += var_code * k
                old = target.get(code)
                if old is None:
                    target[code] = coef
                else:
                    new = add[old][coef]
                    if new:
                        target[code] = new
                    else:
                        del target[code]
    return [Polynomial._wrap(ring, terms) for terms in sums]


def power_sum(forms: Sequence[Polynomial], exponent: int) -> Polynomial:
    """``sum(f**exponent for f in forms)``; see ``power_sums``."""
    return power_sums(forms, [exponent])[0]
