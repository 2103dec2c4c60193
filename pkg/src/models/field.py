"""Prime fields F_p and the quadratic extension F_p[tau]/(tau^2 - tau - 1).

Inside the algebra kernel a field element travels as an integer code
``a + b*p`` in ``[0, q)`` with q = p or p^2. ``FieldElement`` is the public
value type built on top of those codes.
"""

import logging
import re
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple, Union

from sympy import isprime
from sympy.ntheory import sqrt_mod

from src.models.errors import (
    AlgebraError,
    DivisionByZero,
    ExtensionRequired,
    FieldMismatch,
    NotPrime,
    ParseError,
    Reducible,
)

logger = logging.getLogger(__name__)

# Fields up to this order get precomputed add/mul tables
TABLE_LIMIT = 512

# numpy row reduction keeps products of residues in int64
MAX_CHARACTERISTIC = 2 ** 31

_FIELD_RE = re.compile(r"^GF\(\s*(\d+)\s*(\^\s*2)?\s*\)\s*(tau\^2-tau-1)?$")


class _LazyRow:
    """One row of an operation table, computed on demand."""

    __slots__ = ('_op', '_x')

    def __init__(self, op, x: int):
        self._op = op
        self._x = x

    def __getitem__(self, y: int) -> int:
        return self._op(self._x, y)


class _LazyTable:
    """Operation table for fields too large to tabulate."""

    __slots__ = ('_op',)

    def __init__(self, op):
        self._op = op

    def __getitem__(self, x: int) -> _LazyRow:
        return _LazyRow(self._op, x)


@dataclass(frozen=True)
class FieldSpec:
    """A validated field context.

    Attributes:
        p: Characteristic (prime)
        extended: True for F_p[tau]/(tau^2 - tau - 1), False for F_p
    """

    p: int
    extended: bool = False
    _add_table: Any = field(default=None, init=False, repr=False, compare=False)
    _mul_table: Any = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        """Build the operation tables (or their lazy stand-ins)."""
        if self.order <= TABLE_LIMIT:
            q = self.order
            add_table = [[self._add(x, y) for y in range(q)] for x in range(q)]
            mul_table = [[self._mul(x, y) for y in range(q)] for x in range(q)]
        else:
            add_table = _LazyTable(self._add)
            mul_table = _LazyTable(self._mul)
        object.__setattr__(self, '_add_table', add_table)
        object.__setattr__(self, '_mul_table', mul_table)

    # ------------------------------------------------------------------
    # Codes
    # ------------------------------------------------------------------

    @property
    def order(self) -> int:
        """Number of elements q."""
        return self.p * self.p if self.extended else self.p

    @property
    def add_rows(self) -> Any:
        """``add_rows[x][y]`` is the code of x + y."""
        return self._add_table

    @property
    def mul_rows(self) -> Any:
        """``mul_rows[x][y]`` is the code of x * y."""
        return self._mul_table

    def split(self, code: int) -> Tuple[int, int]:
        """Return the (a, b) residues of a code a + b*p."""
        return code % self.p, code // self.p

    def join(self, a: int, b: int = 0) -> int:
        """Return the code of a + b*tau, reducing both residues."""
        if b % self.p and not self.extended:
            raise ExtensionRequired(f"tau is not defined over {self.describe()}")
        return a % self.p + (b % self.p) * self.p

    def from_int(self, n: int) -> int:
        """Code of the image of an integer."""
        return n % self.p

    @property
    def tau_code(self) -> int:
        """Code of tau.

        Over F_p this is the root (1 + sqrt 5)/2 when tau^2 - tau - 1 splits.
        """
        if self.extended:
            return self.p
        root = tau_polynomial_root(self.p)
        if root is None:
            raise ExtensionRequired(
                f"tau is not defined over {self.describe()}: tau^2-tau-1 has no root mod {self.p}"
            )
        return root

    def _add(self, x: int, y: int) -> int:
        p = self.p
        if not self.extended:
            return (x + y) % p
        return (x % p + y % p) % p + ((x // p + y // p) % p) * p

    def _mul(self, x: int, y: int) -> int:
        p = self.p
        if not self.extended:
            return (x * y) % p
        a, b = x % p, x // p
        c, d = y % p, y // p
        bd = b * d
        return (a * c + bd) % p + ((a * d + b * c + bd) % p) * p

    def add(self, x: int, y: int) -> int:
        return self._add_table[x][y]

    def mul(self, x: int, y: int) -> int:
        return self._mul_table[x][y]

    def neg(self, x: int) -> int:
        a, b = self.split(x)
        return (-a) % self.p + ((-b) % self.p) * self.p

    def sub(self, x: int, y: int) -> int:
        return self._add_table[x][self.neg(y)]

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero code."""
        if x == 0:
            raise DivisionByZero(f"0 has no inverse in {self.describe()}")
        p = self.p
        if not self.extended:
            return pow(x, -1, p)
        # (a + b tau)^-1 = (a + b - b tau) / (a^2 + ab - b^2)
        a, b = x % p, x // p
        norm_inv = pow((a * a + a * b - b * b) % p, -1, p)
        return ((a + b) * norm_inv) % p + ((-b * norm_inv) % p) * p

    def power(self, x: int, e: int) -> int:
        """x ** e by square-and-multiply; negative e inverts first."""
        if e < 0:
            x, e = self.inv(x), -e
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, x)
            x = self.mul(x, x)
            e >>= 1
        return result

    # ------------------------------------------------------------------
    # Elements and text
    # ------------------------------------------------------------------

    def element(self, a: int, b: int = 0) -> 'FieldElement':
        """Build the element a + b*tau (residues are reduced mod p)."""
        code = self.join(a, b)
        return FieldElement(self, code % self.p, code // self.p)

    def element_from_code(self, code: int) -> 'FieldElement':
        return FieldElement(self, code % self.p, code // self.p)

    def zero(self) -> 'FieldElement':
        return FieldElement(self, 0, 0)

    def one(self) -> 'FieldElement':
        return FieldElement(self, 1 % self.p, 0)

    def tau(self) -> 'FieldElement':
        """The adjoined root of tau^2 - tau - 1 (or its root in F_p when it splits)."""
        return self.element_from_code(self.tau_code)

    def elements(self) -> List['FieldElement']:
        """All q elements in code order (only sensible for small fields)."""
        return [self.element_from_code(code) for code in range(self.order)]

    def signed(self, residue: int) -> int:
        """Symmetric representative of a residue."""
        return residue - self.p if residue > self.p // 2 else residue

    def describe(self) -> str:
        """Header text for ideal files, e.g. ``GF(13^2) tau^2-tau-1``."""
        if self.extended:
            return f"GF({self.p}^2) tau^2-tau-1"
        return f"GF({self.p})"

    @classmethod
    def parse(cls, text: str) -> 'FieldSpec':
        """Inverse of ``describe``; validates through ``make_field``."""
        match = _FIELD_RE.match(text.strip())
        if not match:
            raise ParseError(f"Invalid field description: {text!r}")
        p = int(match.group(1))
        extended = match.group(2) is not None
        if match.group(3) and not extended:
            raise ParseError(f"Modulus given for a prime field: {text!r}")
        return make_field(p, extended)


def tau_polynomial_root(p: int) -> Optional[int]:
    """Return a root of tau^2 - tau - 1 in F_p, or None if it has none."""
    if p == 2:
        return None
    root_of_five = sqrt_mod(5 % p, p)
    if root_of_five is None:
        return None
    return ((1 + root_of_five) * pow(2, -1, p)) % p


def make_field(p: int, extend: bool = False) -> FieldSpec:
    """Validate a characteristic and build the field context.

    Args:
        p: Characteristic, must be prime
        extend: Adjoin tau with tau^2 = tau + 1

    Returns:
        The validated FieldSpec

    Raises:
        NotPrime: p is not prime
        Reducible: extend is set and tau^2 - tau - 1 has a root mod p
    """
    if not isinstance(p, int) or not isprime(p):
        raise NotPrime(f"Characteristic must be prime, got: {p}")
    if p >= MAX_CHARACTERISTIC:
        raise AlgebraError(f"Characteristic must be below 2^31, got: {p}")

    if extend:
        root = tau_polynomial_root(p)
        if root is not None:
            raise Reducible(
                f"tau^2-tau-1 has the root {root} mod {p} "
                f"(it splits when p = 5 or p = +-1 mod 5), "
                f"so F_{p}[tau]/(tau^2-tau-1) is not a field of order {p}^2"
            )

    spec = FieldSpec(p, extend)
    logger.debug(f"Created field {spec.describe()}")
    return spec


@dataclass(frozen=True)
class FieldElement:
    """An element a + b*tau with canonical residues a, b in [0, p).

    Attributes:
        field: Field context
        a: Constant residue
        b: tau residue (always 0 over a prime field)
    """

    field: FieldSpec
    a: int
    b: int = 0

    def __post_init__(self):
        """Validate canonical form."""
        p = self.field.p
        if not (0 <= self.a < p and 0 <= self.b < p):
            raise ValueError(f"Residues must lie in [0, {p}), got: ({self.a}, {self.b})")
        if self.b and not self.field.extended:
            raise ExtensionRequired(f"tau is not defined over {self.field.describe()}")

    @property
    def code(self) -> int:
        return self.a + self.b * self.field.p

    def _coerce(self, other: Union['FieldElement', int]) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(
                    f"Cannot combine {self.field.describe()} with {other.field.describe()}"
                )
            return other.code
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, code: int) -> 'FieldElement':
        return self.field.element_from_code(code)

    def __add__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.add(self.code, code))

    __radd__ = __add__

    def __sub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(self.code, code))

    def __rsub__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.sub(code, self.code))

    def __mul__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.code, code))

    __rmul__ = __mul__

    def __neg__(self) -> 'FieldElement':
        return self._wrap(self.field.neg(self.code))

    def __truediv__(self, other):
        code = self._coerce(other)
        if code is NotImplemented:
            return NotImplemented
        return self._wrap(self.field.mul(self.code, self.field.inv(code)))

    def __pow__(self, exponent: int) -> 'FieldElement':
        return self._wrap(self.field.power(self.code, exponent))

    def __bool__(self) -> bool:
        return self.code != 0

    def inv(self) -> 'FieldElement':
        """Multiplicative inverse; DivisionByZero for 0."""
        return self._wrap(self.field.inv(self.code))

    def conjugate(self) -> 'FieldElement':
        """Frobenius image a^p (swaps tau with 1 - tau)."""
        return self ** self.field.p

    def __str__(self) -> str:
        a = self.field.signed(self.a)
        b = self.field.signed(self.b)
        if b == 0:
            return str(a)
        if b == 1:
            tau_part = "tau"
        elif b == -1:
            tau_part = "-tau"
        else:
            tau_part = f"{b}*tau"
        if a == 0:
            return tau_part
        if tau_part.startswith('-'):
            return f"{a} - {tau_part[1:]}"
        return f"{a} + {tau_part}"

    def __repr__(self) -> str:
        return f"FieldElement({self}, {self.field.describe()})"


def to_codes(field_spec: FieldSpec, values: Sequence[Union[FieldElement, int]]) -> List[int]:
    """Convert a sequence of elements or integers to codes of one field."""
    codes = []
    for value in values:
        if isinstance(value, FieldElement):
            if value.field != field_spec:
                raise FieldMismatch(
                    f"Expected {field_spec.describe()}, got {value.field.describe()}"
                )
            codes.append(value.code)
        else:
            codes.append(field_spec.from_int(value))
    return codes
