"""Result types of the Groebner engine: bases, standard monomials, Hilbert functions."""

from dataclasses import dataclass, field
from typing import Any, FrozenSet, Iterator, List, Optional, Tuple

from src.models.polynomial import Polynomial
from src.models.report import GroebnerStats
from src.models.ring import Monomial, RingContext


@dataclass
class GroebnerBasis:
    """A Groebner basis of a homogeneous ideal.

    Attributes:
        ring: Ring context (fixes the term order)
        polynomials: Monic basis elements sorted ascending by leading monomial
        reduced: True after final inter-reduction
        complete: False when a degree cap stopped the computation early
        pairs_considered: S-pairs that were reduced
        pairs_reduced_to_zero: S-pairs whose remainder was zero
        early_stop_degree: Degree after which every monomial was in the
            initial ideal, if the run stopped for that reason
    """

    ring: RingContext
    polynomials: List[Polynomial]
    reduced: bool = True
    complete: bool = True
    pairs_considered: int = 0
    pairs_reduced_to_zero: int = 0
    early_stop_degree: Optional[int] = None
    _reducer: Any = field(default=None, init=False, repr=False, compare=False)

    def __len__(self) -> int:
        return len(self.polynomials)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.polynomials)

    def leading_monomials(self) -> List[int]:
        return [g.leading_monomial for g in self.polynomials]

    @property
    def max_degree(self) -> int:
        return max((g.degree for g in self.polynomials), default=0)

    def stats(self) -> GroebnerStats:
        return GroebnerStats(
            size=len(self.polynomials),
            max_degree=self.max_degree,
            pairs_considered=self.pairs_considered,
            pairs_reduced_to_zero=self.pairs_reduced_to_zero,
            complete=self.complete,
        )


@dataclass
class StandardMonomialBasis:
    """Per-degree standard monomials of an Artinian (or capped) quotient.

    Attributes:
        ring: Ring context
        by_degree: ``by_degree[i]`` lists the codes of S_i, descending
        complete: False when enumeration was cut by a degree cap
    """

    ring: RingContext
    by_degree: List[List[int]]
    complete: bool = True
    _members: FrozenSet[int] = field(default=frozenset(), init=False, repr=False, compare=False)

    def __post_init__(self):
        """Strip trailing empty degrees and index all members."""
        while self.by_degree and not self.by_degree[-1]:
            self.by_degree.pop()
        self._members = frozenset(m for layer in self.by_degree for m in layer)

    @property
    def socle_degree(self) -> int:
        """Largest degree with a standard monomial (-1 for the zero ring)."""
        return len(self.by_degree) - 1

    @property
    def dimension(self) -> int:
        return len(self._members)

    def sizes(self) -> List[int]:
        return [len(layer) for layer in self.by_degree]

    def layer(self, i: int) -> List[int]:
        """Codes of S_i; empty outside [0, socle]."""
        if 0 <= i < len(self.by_degree):
            return self.by_degree[i]
        return []

    def monomials(self, i: int) -> List[Monomial]:
        return [self.ring.monomial(m) for m in self.layer(i)]

    def is_standard(self, code: int) -> bool:
        return code in self._members

    def __contains__(self, code: int) -> bool:
        return code in self._members


@dataclass(frozen=True)
class HilbertFunction:
    """h_i = dim of the degree-i component of the quotient.

    Attributes:
        values: h_0, ..., h_c
    """

    values: Tuple[int, ...]

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    @property
    def total(self) -> int:
        return sum(self.values)

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.values):
            return self.values[i]
        return 0

    def to_list(self) -> List[int]:
        return list(self.values)

    def __str__(self) -> str:
        return " ".join(str(h) for h in self.values)
