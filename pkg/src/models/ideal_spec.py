"""Ideal specifications handed to the Lefschetz checkers."""

from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

from src.models.errors import ContextMismatch, NonHomogeneousInput, NotLinear
from src.models.polynomial import Polynomial
from src.models.report import CandidateElement
from src.models.ring import RingContext


@dataclass(frozen=True)
class RootList:
    """Linear forms (positive roots) in one ring.

    Attributes:
        ring: Ring of the forms
        roots: The forms, in their listed order
    """

    ring: RingContext
    roots: Tuple[Polynomial, ...]

    def __post_init__(self):
        """Validate that every root is a linear form of the ring."""
        object.__setattr__(self, 'roots', tuple(self.roots))
        for k, root in enumerate(self.roots):
            if root.ring != self.ring:
                raise ContextMismatch(f"Root {k + 1} lives in a different ring")
            if not root.is_linear():
                raise NotLinear(f"Root {k + 1} is not a linear form: {root}")

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.roots)

    def __getitem__(self, k: int) -> Polynomial:
        return self.roots[k]

    def lines(self) -> Set[Polynomial]:
        """The roots up to scalars (each made monic)."""
        return {root.monic() for root in self.roots}

    def pairwise_non_proportional(self) -> bool:
        return len(self.lines()) == len(self.roots)


@dataclass(frozen=True)
class CoinvariantIdealSpec:
    """Generators of a graded ideal plus the Lefschetz candidate to test.

    Attributes:
        name: Selector the spec was built from ('h4', 'a3', 'ci:2,2', 'file')
        ring: Ring context of the generators
        generators: Homogeneous generators
        candidate: Lefschetz candidate; the last variable when omitted
        complete_intersection: True when the generators are known to form a
            regular sequence, so the Hilbert function follows from the degrees
    """

    name: str
    ring: RingContext
    generators: Tuple[Polynomial, ...]
    candidate: Optional[CandidateElement] = None
    complete_intersection: bool = False

    def __post_init__(self):
        """Validate generators and default the candidate."""
        object.__setattr__(self, 'generators', tuple(self.generators))
        for k, g in enumerate(self.generators):
            if g.ring != self.ring:
                raise ContextMismatch(f"Generator {k + 1} lives in a different ring")
            if not g.is_homogeneous():
                raise NonHomogeneousInput(f"Generator {k + 1} is not homogeneous: {g}")
        if self.candidate is None:
            object.__setattr__(self, 'candidate', CandidateElement(self.last_variable))
        elif self.candidate.ring != self.ring:
            raise ContextMismatch("The candidate lives in a different ring")

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(g.degree for g in self.generators)

    @property
    def last_variable(self) -> Polynomial:
        return Polynomial.variable(self.ring, self.ring.n - 1)

    def expected_hilbert(self) -> Optional[List[int]]:
        """Product-formula Hilbert function for complete intersections, else None."""
        if not self.complete_intersection:
            return None
        from src.services.standard_monomials import complete_intersection_hilbert
        return complete_intersection_hilbert(self.degrees)

    def with_candidate(self, candidate: CandidateElement) -> 'CoinvariantIdealSpec':
        return CoinvariantIdealSpec(
            name=self.name,
            ring=self.ring,
            generators=self.generators,
            candidate=candidate,
            complete_intersection=self.complete_intersection,
        )
