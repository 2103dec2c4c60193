"""Monomial ideals given by minimal generators."""

from typing import Iterable, List, Optional, Sequence

from src.models.errors import ContextMismatch
from src.models.ring import Monomial, RingContext


class MonomialIdeal:
    """A monomial ideal with minimal generators sorted ascending.

    Attributes:
        ring: Ring context
        generators: Minimal monomial generator codes, pairwise non-dividing
    """

    def __init__(self, ring: RingContext, generators: Iterable[int]):
        self.ring = ring
        self.generators: List[int] = minimalize(ring, generators)
        # degree -> generators of that degree, for membership tests by degree
        self._by_degree = {}
        for g in self.generators:
            self._by_degree.setdefault(ring.degree(g), []).append(g)
        self._degrees = sorted(self._by_degree)

    @classmethod
    def from_monomials(cls, ring: RingContext, monomials: Sequence[Monomial]) -> 'MonomialIdeal':
        return cls(ring, [ring.code_of(m) for m in monomials])

    def __contains__(self, code: int) -> bool:
        return self.contains(code)

    def contains(self, code: int) -> bool:
        """True if some generator divides the monomial ``code``."""
        ring = self.ring
        degree = ring.degree(code)
        guard = ring.guard
        digits = ring.digits(code) | guard
        for d in self._degrees:
            if d > degree:
                break
            for g in self._by_degree[d]:
                if (digits - ring.digits(g)) & guard == guard:
                    return True
        return False

    def contains_monomial(self, monomial: Monomial) -> bool:
        return self.contains(self.ring.code_of(monomial))

    def pure_power_exponents(self) -> List[Optional[int]]:
        """Smallest pure power exponent of every variable (None if absent)."""
        result: List[Optional[int]] = [None] * self.ring.n
        for g in self.generators:
            i = self.ring.pure_power_variable(g)
            if i is not None:
                e = self.ring.decode(g)[i]
                if result[i] is None or e < result[i]:
                    result[i] = e
        return result

    def is_artinian(self) -> bool:
        """True if every variable has a pure power in the ideal."""
        return all(e is not None for e in self.pure_power_exponents())

    def monomials(self) -> List[Monomial]:
        return [self.ring.monomial(g) for g in self.generators]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ring == other.ring and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.ring, tuple(self.generators)))

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        names = ", ".join(self.ring.format_monomial(g) for g in self.generators)
        return f"MonomialIdeal<{names}>"


def minimalize(ring: RingContext, generators: Iterable[int]) -> List[int]:
    """Drop generators divisible by another generator; sort ascending."""
    minimal: List[int] = []
    for g in sorted(set(generators), key=lambda c: (ring.degree(c), c)):
        if not any(ring.divides(h, g) for h in minimal):
            minimal.append(g)
    minimal.sort()
    return minimal


def colon_monomial(ideal: MonomialIdeal, monomial: Monomial) -> MonomialIdeal:
    """The colon ideal J : m, generated by g / gcd(g, m) for g in J.

    Membership satisfies u in J : m  iff  u * m in J.
    """
    ring = ideal.ring
    if len(monomial) != ring.n:
        raise ContextMismatch(f"Monomial has {len(monomial)} variables, ring has {ring.n}")
    m = monomial.exponents
    quotients = []
    for g in ideal.generators:
        exponents = ring.decode(g)
        quotients.append(ring.encode(tuple(max(e - k, 0) for e, k in zip(exponents, m))))
    return MonomialIdeal(ring, quotients)
