"""Initial ideals, standard monomial bases and Hilbert functions."""

import logging
from typing import List, Optional, Sequence

import numpy as np

from src.models.errors import ExponentOverflow, NotArtinian
from src.models.groebner import GroebnerBasis, HilbertFunction, StandardMonomialBasis
from src.models.monomial_ideal import MonomialIdeal
from src.models.ring import EXPONENT_LIMIT, RingContext

logger = logging.getLogger(__name__)


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    """Monomial ideal generated by the leading monomials of G."""
    return MonomialIdeal(G.ring, G.leading_monomials())


def standard_monomials(J: MonomialIdeal, ring: Optional[RingContext] = None,
                       max_degree: Optional[int] = None) -> StandardMonomialBasis:
    """Enumerate the monomials outside J degree by degree.

    S_{d+1} is obtained from S_d by multiplying with every variable and
    dropping members of J, since the complement of J is an order ideal.

    Args:
        J: Monomial ideal
        ring: Ring context (defaults to J's)
        max_degree: Last degree to enumerate; required when J is not Artinian

    Raises:
        NotArtinian: some variable has no pure power in J and max_degree is None
        ExponentOverflow: enumeration would pass degree EXPONENT_LIMIT
    """
    ring = ring or J.ring
    if max_degree is None and not J.is_artinian():
        missing = [ring.variables[i] for i, e in enumerate(J.pure_power_exponents()) if e is None]
        raise NotArtinian(
            f"The quotient is infinite-dimensional: no pure power of {', '.join(missing)} "
            f"in the initial ideal"
        )

    variables = [ring.variable_code(j) for j in range(ring.n)]
    one = ring.one()
    layer = [] if J.contains(one) else [one]
    layers: List[List[int]] = []
    complete = True
    degree = 0
    while layer:
        layers.append(layer)
        if max_degree is not None and degree >= max_degree:
            complete = all(J.contains(m + v) for m in layer for v in variables)
            break
        if degree >= EXPONENT_LIMIT:
            raise ExponentOverflow(
                f"Standard monomials continue past degree {EXPONENT_LIMIT}, the largest "
                f"exponent a monomial code holds; use a degree cap of at most {EXPONENT_LIMIT}"
            )
        candidates = {m + v for m in layer for v in variables}
        layer = sorted((m for m in candidates if not J.contains(m)), reverse=True)
        degree += 1

    basis = StandardMonomialBasis(ring, layers, complete=complete)
    logger.debug(
        f"Standard monomials: socle degree {basis.socle_degree}, "
        f"dimension {basis.dimension}"
    )
    return basis


def hilbert_function(B: StandardMonomialBasis) -> HilbertFunction:
    """h_i = |S_i|."""
    return HilbertFunction(tuple(B.sizes()))


def complete_intersection_hilbert(degrees: Sequence[int]) -> List[int]:
    """Coefficients of prod(1 + t + ... + t^(d-1)) over the given degrees."""
    if any(d < 1 for d in degrees):
        raise ValueError(f"Degrees must be positive, got: {list(degrees)}")
    series = np.ones(1, dtype=np.int64)
    for d in degrees:
        series = np.polymul(series, np.ones(d, dtype=np.int64))
    return [int(h) for h in series]
