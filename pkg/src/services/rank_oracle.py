"""Brute-force ranks of multiplication maps on the quotient.

Independent of the initial-ideal criterion: the matrix of multiplication by
l^s from S_i to S_(i+s) is built from normal forms and its rank is found by
row reduction over the field. Any term order works.
"""

import logging
from typing import Dict, List, Sequence, Tuple

from src.lib import field_linalg
from src.models.errors import ContextMismatch
from src.models.polynomial import Polynomial
from src.models.report import CandidateElement
from src.models.ring import RingContext
from src.services.groebner import buchberger, normal_form
from src.services.standard_monomials import initial_ideal, standard_monomials

logger = logging.getLogger(__name__)


class RankOracle:
    """Caches the basis and standard monomials of one ideal for repeated rank queries."""

    def __init__(self, generators: Sequence[Polynomial], ring: RingContext):
        """Compute the Groebner basis and standard monomials.

        Raises:
            NotArtinian: the quotient is infinite-dimensional
        """
        self.ring = ring
        self.basis = buchberger(generators, ring)
        self.standard = standard_monomials(initial_ideal(self.basis), ring)
        self._columns: Dict[int, Dict[int, int]] = {}
        self._images: Dict[Tuple[Polynomial, int, int], Polynomial] = {}

    @property
    def socle_degree(self) -> int:
        return self.standard.socle_degree

    def _column_index(self, degree: int) -> Dict[int, int]:
        if degree not in self._columns:
            self._columns[degree] = {m: k for k, m in enumerate(self.standard.layer(degree))}
        return self._columns[degree]

    def image(self, l: Polynomial, m: int, s: int) -> Polynomial:
        """Normal form of l^s * m, built as NF(l * NF(l^(s-1) * m))."""
        key = (l, m, s)
        cached = self._images.get(key)
        if cached is not None:
            return cached
        if s == 0:
            result = Polynomial.monomial(self.ring, m)
        else:
            result = normal_form(self.image(l, m, s - 1) * l, self.basis)
        self._images[key] = result
        return result

    def matrix(self, l: Polynomial, i: int, s: int) -> List[List[int]]:
        """Rows: images of S_i; columns: S_(i+s)."""
        columns = self._column_index(i + s)
        rows = []
        for m in self.standard.layer(i):
            row = [0] * len(columns)
            for code, c in self.image(l, m, s).term_codes():
                row[columns[code]] = c
            rows.append(row)
        return rows

    def _check_candidate(self, l: Polynomial) -> None:
        if l.ring != self.ring:
            raise ContextMismatch("The candidate does not live in the oracle's ring")
        CandidateElement(l)

    def rank(self, l: Polynomial, i: int, s: int) -> int:
        """Rank of multiplication by l^s from degree i to degree i + s."""
        self._check_candidate(l)
        if not self.standard.layer(i) or not self.standard.layer(i + s):
            return 0
        return field_linalg.rank(self.ring.field, self.matrix(l, i, s))

    def full_rank(self, l: Polynomial, i: int, s: int) -> bool:
        expected = min(len(self.standard.layer(i)), len(self.standard.layer(i + s)))
        return self.rank(l, i, s) == expected

    def verdict(self, l: Polynomial, weak: bool = False) -> bool:
        """True if every map l^s (s = 1 only when weak) has full rank."""
        c = self.socle_degree
        for i in range(c):
            for s in ([1] if weak else range(1, c - i + 1)):
                if not self.full_rank(l, i, s):
                    logger.debug(f"Oracle: l^{s} from degree {i} is not of full rank")
                    return False
        return True


def brute_force_rank(generators: Sequence[Polynomial], ring: RingContext,
                     l: Polynomial, i: int, s: int) -> int:
    """One-shot rank of multiplication by l^s from degree i.

    Raises:
        NotArtinian: the quotient is infinite-dimensional
    """
    return RankOracle(generators, ring).rank(l, i, s)


def brute_force_verdict(generators: Sequence[Polynomial], ring: RingContext,
                        l: Polynomial, weak: bool = False) -> bool:
    """Lefschetz verdict computed only from brute-force ranks."""
    verdict = RankOracle(generators, ring).verdict(l, weak=weak)
    logger.info(f"Brute-force {'weak' if weak else 'strong'} verdict: {verdict}")
    return verdict
