"""The line-oriented ideal file format.

    # comment
    field: GF(13^2) tau^2-tau-1
    vars: v1 > v2 > v3 > l
    order: grevlex
    <one generator per line>
    lefschetz: <linear form>        (optional)
"""

import hashlib
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from src.lib.polynomial_text import parse_polynomial
from src.models.errors import AlgebraError, NonHomogeneousInput, ParseError
from src.models.field import FieldSpec, make_field
from src.models.ideal_spec import CoinvariantIdealSpec
from src.models.polynomial import Polynomial
from src.models.report import CandidateElement
from src.models.ring import RingContext, TermOrder

HEADER_KEYS = ('field', 'vars', 'order', 'lefschetz')


@dataclass(frozen=True)
class IdealFile:
    """A parsed ideal file.

    Attributes:
        ring: Field, variables and term order from the header
        generators: Homogeneous generators in file order
        candidate: Optional Lefschetz candidate
    """

    ring: RingContext
    generators: Tuple[Polynomial, ...]
    candidate: Optional[Polynomial] = None

    @classmethod
    def from_text(cls, text: str, prime: Optional[int] = None) -> 'IdealFile':
        """Parse file text.

        Args:
            text: File contents
            prime: Re-read integer coefficients modulo this prime instead of
                the header's, keeping the header's extension flag

        Raises:
            ParseError: malformed header or polynomial (with line number)
            NonHomogeneousInput: a generator is not homogeneous
        """
        field_spec: Optional[FieldSpec] = None
        variables: Optional[Tuple[str, ...]] = None
        order = TermOrder.GREVLEX
        ring: Optional[RingContext] = None
        generators: List[Polynomial] = []
        candidate_line: Optional[Tuple[int, str]] = None

        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith('#'):
                continue
            try:
                key, sep, value = line.partition(':')
                key = key.strip().lower()
                if sep and key in HEADER_KEYS:
                    value = value.strip()
                    if ring is not None and key != 'lefschetz':
                        raise ParseError(f"Header '{key}' after the first generator")
                    if key == 'field':
                        parsed = FieldSpec.parse(value)
                        field_spec = make_field(prime, parsed.extended) if prime else parsed
                    elif key == 'vars':
                        variables = _parse_variables(value)
                    elif key == 'order':
                        try:
                            order = TermOrder(value.lower())
                        except ValueError:
                            raise ParseError(f"Unknown term order {value!r}") from None
                    else:
                        candidate_line = (lineno, value)
                    continue

                if ring is None:
                    if field_spec is None or variables is None:
                        raise ParseError("The 'field' and 'vars' headers must precede the generators")
                    ring = RingContext(field_spec, variables, order)
                poly = parse_polynomial(line, ring)
                if not poly.is_homogeneous():
                    raise NonHomogeneousInput(f"Generator is not homogeneous: {line}")
                generators.append(poly)
            except AlgebraError as e:
                if e.line is None:
                    e.line = lineno
                raise
            except ValueError as e:
                raise ParseError(str(e), line=lineno) from None

        if ring is None:
            if field_spec is None or variables is None:
                raise ParseError("Missing 'field' or 'vars' header")
            try:
                ring = RingContext(field_spec, variables, order)
            except AlgebraError:
                raise
            except ValueError as e:
                raise ParseError(str(e)) from None
        if not generators:
            raise ParseError("The file lists no generators")

        candidate = None
        if candidate_line is not None:
            lineno, value = candidate_line
            try:
                candidate = parse_polynomial(value, ring)
            except AlgebraError as e:
                if e.line is None:
                    e.line = lineno
                raise
        return cls(ring=ring, generators=tuple(generators), candidate=candidate)

    @classmethod
    def read(cls, path: Path, prime: Optional[int] = None) -> 'IdealFile':
        """Read and parse a UTF-8 ideal file.

        Raises:
            ParseError: the file is not valid UTF-8, or any error of ``from_text``
        """
        try:
            with open(path, 'r', encoding='utf-8') as f:
                text = f.read()
        except UnicodeDecodeError as e:
            raise ParseError(f"{path} is not UTF-8 text: {e.reason} at byte {e.start}") from None
        return cls.from_text(text, prime=prime)

    @classmethod
    def from_polynomials(cls, ring: RingContext, polynomials: Sequence[Polynomial],
                         candidate: Optional[Polynomial] = None) -> 'IdealFile':
        return cls(ring=ring, generators=tuple(polynomials), candidate=candidate)

    def to_text(self) -> str:
        """Canonical text (comments and blank lines are not kept)."""
        lines = [
            f"field: {self.ring.field.describe()}",
            f"vars: {self.ring.describe_variables()}",
            f"order: {self.ring.order.value}",
        ]
        lines.extend(str(g) for g in self.generators)
        if self.candidate is not None:
            lines.append(f"lefschetz: {self.candidate}")
        return "\n".join(lines) + "\n"

    def write(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8') as f:
            f.write(self.to_text())

    def input_hash(self) -> str:
        """sha256 of the canonical text."""
        return hashlib.sha256(self.to_text().encode('utf-8')).hexdigest()

    def to_spec(self) -> CoinvariantIdealSpec:
        candidate = CandidateElement(self.candidate) if self.candidate is not None else None
        return CoinvariantIdealSpec(
            name='file',
            ring=self.ring,
            generators=self.generators,
            candidate=candidate,
        )


def _parse_variables(value: str) -> Tuple[str, ...]:
    separator = '>' if '>' in value else ','
    names = tuple(name.strip() for name in value.split(separator) if name.strip())
    if separator == ',' and len(names) == 1:
        names = tuple(value.split())
    if not names:
        raise ParseError("Empty variable list")
    return names
