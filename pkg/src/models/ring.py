"""Ring contexts, monomials and term orders.

Monomials travel through the kernel as packed integer codes. Each exponent
occupies one byte whose top bit is kept free as a guard bit, so exponents
are limited to 127. The packing is chosen per term order so that

* integer order of codes equals the term order, and
* multiplying monomials is adding their codes.

Graded reverse lexicographic codes are ``deg * 256^n - D`` where ``D`` holds
the exponents as base-256 digits with the last variable most significant.
Lexicographic codes hold the exponents with the first variable most
significant.
"""

import itertools
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, Optional, Sequence, Tuple

from src.models.errors import ArityMismatch, ExponentOverflow
from src.models.field import FieldSpec

BITS = 8
EXPONENT_LIMIT = 127

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
RESERVED_NAMES = {'tau'}


class TermOrder(Enum):
    """Supported term orders."""
    GREVLEX = "grevlex"
    LEX = "lex"


@dataclass(frozen=True)
class Monomial:
    """An exponent vector with its total degree.

    Attributes:
        exponents: One nonnegative exponent per ring variable
        degree: Sum of the exponents
    """

    exponents: Tuple[int, ...]
    degree: int = field(init=False, compare=False)

    def __post_init__(self):
        """Validate exponents and cache the degree."""
        exponents = tuple(self.exponents)
        if any(e < 0 for e in exponents):
            raise ValueError(f"Exponents must be nonnegative, got: {exponents}")
        object.__setattr__(self, 'exponents', exponents)
        object.__setattr__(self, 'degree', sum(exponents))

    def __len__(self) -> int:
        return len(self.exponents)

    def __mul__(self, other: 'Monomial') -> 'Monomial':
        _check_arity(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divides(self, other: 'Monomial') -> bool:
        _check_arity(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: 'Monomial') -> 'Monomial':
        _check_arity(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: 'Monomial') -> 'Monomial':
        _check_arity(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))


def _check_arity(m1: Monomial, m2: Monomial) -> None:
    if len(m1) != len(m2):
        raise ArityMismatch(f"Monomials have {len(m1)} and {len(m2)} variables")


@dataclass(frozen=True)
class RingContext:
    """The polynomial ring K[x_1, ..., x_n] with a fixed term order.

    Attributes:
        field: Coefficient field
        variables: Variable names; the listed order is the variable order
        order: Term order (grevlex is required for Lefschetz checks)
    """

    field: FieldSpec
    variables: Tuple[str, ...]
    order: TermOrder = TermOrder.GREVLEX

    def __post_init__(self):
        """Validate variable names and precompute packing constants."""
        names = tuple(self.variables)
        object.__setattr__(self, 'variables', names)
        if not names:
            raise ValueError("A ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"Variable names must be distinct, got: {names}")
        for name in names:
            if not _NAME_RE.match(name) or name in RESERVED_NAMES:
                raise ValueError(f"Invalid variable name: {name!r}")
        if not isinstance(self.order, TermOrder):
            object.__setattr__(self, 'order', TermOrder(self.order))

    # ------------------------------------------------------------------
    # Basic facts
    # ------------------------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.variables)

    @property
    def is_grevlex(self) -> bool:
        return self.order is TermOrder.GREVLEX

    @property
    def _shift(self) -> int:
        return BITS * self.n

    @property
    def guard(self) -> int:
        """Guard bits of every exponent byte."""
        return sum(1 << (BITS * i + BITS - 1) for i in range(self.n))

    def index(self, name: str) -> int:
        """Position of a variable name."""
        try:
            return self.variables.index(name)
        except ValueError:
            raise ValueError(f"Unknown variable {name!r} in ring {self.describe_variables()}") from None

    def describe_variables(self) -> str:
        """Header text for ideal files, e.g. ``v1 > v2 > v3 > l``."""
        return " > ".join(self.variables)

    def with_variables(self, variables: Sequence[str]) -> 'RingContext':
        return RingContext(self.field, tuple(variables), self.order)

    def with_order(self, order: TermOrder) -> 'RingContext':
        return RingContext(self.field, self.variables, order)

    def with_field(self, field_spec: FieldSpec) -> 'RingContext':
        return RingContext(field_spec, self.variables, self.order)

    # ------------------------------------------------------------------
    # Monomial codes
    # ------------------------------------------------------------------

    def _digit_place(self, i: int) -> int:
        """Bit offset of variable i inside the digit number."""
        if self.is_grevlex:
            return BITS * i
        return BITS * (self.n - 1 - i)

    def encode(self, exponents: Sequence[int]) -> int:
        """Pack an exponent vector into a monomial code."""
        if len(exponents) != self.n:
            raise ArityMismatch(
                f"Expected {self.n} exponents for ring {self.describe_variables()}, got {len(exponents)}"
            )
        digits = 0
        for i, e in enumerate(exponents):
            if e < 0:
                raise ValueError(f"Exponents must be nonnegative, got: {tuple(exponents)}")
            if e > EXPONENT_LIMIT:
                raise ExponentOverflow(f"Exponent {e} exceeds the limit {EXPONENT_LIMIT}")
            digits |= e << self._digit_place(i)
        if self.is_grevlex:
            return (sum(exponents) << self._shift) - digits
        return digits

    def digits(self, code: int) -> int:
        """Exponent digit number of a code (guard bits clear)."""
        if self.is_grevlex:
            degree = -((-code) >> self._shift)
            return (degree << self._shift) - code
        return code

    def decode(self, code: int) -> Tuple[int, ...]:
        """Unpack a code into its exponent vector."""
        digits = self.digits(code)
        mask = (1 << BITS) - 1
        return tuple((digits >> self._digit_place(i)) & mask for i in range(self.n))

    def degree(self, code: int) -> int:
        if self.is_grevlex:
            return -((-code) >> self._shift)
        return sum(self.decode(code))

    def divides(self, divisor: int, code: int) -> bool:
        """True if the monomial ``divisor`` divides the monomial ``code``."""
        guard = self.guard
        return ((self.digits(code) | guard) - self.digits(divisor)) & guard == guard

    def lcm(self, c1: int, c2: int) -> int:
        return self.encode(tuple(max(a, b) for a, b in zip(self.decode(c1), self.decode(c2))))

    def gcd(self, c1: int, c2: int) -> int:
        return self.encode(tuple(min(a, b) for a, b in zip(self.decode(c1), self.decode(c2))))

    def one(self) -> int:
        """Code of the constant monomial."""
        return 0

    def variable_code(self, i: int) -> int:
        exponents = [0] * self.n
        exponents[i] = 1
        return self.encode(exponents)

    def pure_power_variable(self, code: int) -> Optional[int]:
        """Index of the only variable in a pure power, else None."""
        support = [i for i, e in enumerate(self.decode(code)) if e]
        return support[0] if len(support) == 1 else None

    def monomial(self, code: int) -> Monomial:
        return Monomial(self.decode(code))

    def code_of(self, monomial: Monomial) -> int:
        return self.encode(monomial.exponents)

    def monomials_of_degree(self, degree: int) -> List[int]:
        """All monomial codes of one degree, sorted descending."""
        codes = [self.encode(exps) for exps in compositions(degree, self.n)]
        codes.sort(reverse=True)
        return codes

    def format_monomial(self, code: int) -> str:
        """Text of a monomial, e.g. ``x^2*y`` (``1`` for the constant)."""
        factors = []
        for name, e in zip(self.variables, self.decode(code)):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors) if factors else "1"


def compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    """All exponent vectors of ``parts`` entries summing to ``total``."""
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        previous = -1
        exponents = []
        for bar in bars:
            exponents.append(bar - previous - 1)
            previous = bar
        exponents.append(total + parts - 1 - previous - 1)
        yield tuple(exponents)


def compare(m1: Monomial, m2: Monomial, ctx: RingContext) -> int:
    """Compare two monomials under the ring's term order.

    Returns:
        1 if m1 > m2, -1 if m1 < m2, 0 if equal

    Raises:
        ArityMismatch: a monomial does not have ctx.n exponents
    """
    c1 = ctx.encode(m1.exponents)
    c2 = ctx.encode(m2.exponents)
    return (c1 > c2) - (c1 < c2)
