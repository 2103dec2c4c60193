"""Buchberger's algorithm for homogeneous ideals and normal forms.

The engine works on code dictionaries (see models.ring and models.field).
Pairs and input generators are processed degree by degree (normal strategy)
with the Gebauer-Moeller form of the product and chain criteria. Once every
monomial of some degree lies in the initial ideal, everything of higher
degree reduces to zero and the run stops there.
"""

import heapq
import logging
from typing import Dict, List, Optional, Sequence, Set, Tuple, Union

from src.models.errors import ContextMismatch, NonHomogeneousInput
from src.models.groebner import GroebnerBasis
from src.models.monomial_ideal import MonomialIdeal
from src.models.polynomial import Polynomial
from src.models.ring import RingContext

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


class Reducer:
    """Monic reducers with a divisor cache.

    Positive cache entries (monomial -> reducer index) stay valid because
    reducers are only ever appended. Negative entries remember how many
    reducers were already ruled out.
    """

    def __init__(self, ring: RingContext):
        self.ring = ring
        self.guard = ring.guard
        self.polynomials: List[Polynomial] = []
        self.leading: List[int] = []
        self._digits: List[int] = []
        self._tails: List[List[Tuple[int, int]]] = []
        self._hits: Dict[int, int] = {}
        self._checked: Dict[int, int] = {}

    def __len__(self) -> int:
        return len(self.polynomials)

    def add(self, poly: Polynomial) -> int:
        """Append a monic polynomial; returns its index."""
        terms = poly.term_codes()
        lm = terms[0][0]
        self.polynomials.append(poly)
        self.leading.append(lm)
        self._digits.append(self.ring.digits(lm))
        self._tails.append(terms[1:])
        return len(self.polynomials) - 1

    def find(self, code: int) -> Optional[int]:
        """Index of the first reducer whose leading monomial divides ``code``."""
        hit = self._hits.get(code)
        if hit is not None:
            return hit
        start = self._checked.get(code, 0)
        count = len(self._digits)
        if start == count:
            return None
        guard = self.guard
        digits = self.ring.digits(code) | guard
        lm_digits = self._digits
        for k in range(start, count):
            if (digits - lm_digits[k]) & guard == guard:
                self._hits[code] = k
                return k
        self._checked[code] = count
        return None

    def reduce(self, terms: Dict[int, int]) -> Dict[int, int]:
        """Full reduction of a code dictionary (consumed) to normal form."""
        field_spec = self.ring.field
        add = field_spec.add_rows
        mul = field_spec.mul_rows
        neg = field_spec.neg
        find = self.find
        leading = self.leading
        tails = self._tails

        heap = [-m for m in terms]
        heapq.heapify(heap)
        result: Dict[int, int] = {}
        while heap:
            m = -heapq.heappop(heap)
            c = terms.pop(m, 0)
            if not c:
                continue
            k = find(m)
            if k is None:
                result[m] = c
                continue
            shift = m - leading[k]
            row = mul[neg(c)]
            for tm, tc in tails[k]:
                t = tm + shift
                old = terms.get(t)
                if old is None:
                    terms[t] = row[tc]
                    heapq.heappush(heap, -t)
                else:
                    new = add[old][row[tc]]
                    if new:
                        terms[t] = new
                    else:
                        del terms[t]
        return result


def _reducer_for(G: GroebnerBasis) -> Reducer:
    if G._reducer is None:
        reducer = Reducer(G.ring)
        for g in G.polynomials:
            reducer.add(g.monic())
        G._reducer = reducer
    return G._reducer


def normal_form(f: Polynomial, G: Union[GroebnerBasis, Sequence[Polynomial]]) -> Polynomial:
    """Remainder of f on division by G, supported on standard monomials.

    Raises:
        ContextMismatch: f and G live in different rings
    """
    if isinstance(G, GroebnerBasis):
        ring = G.ring
        reducer = _reducer_for(G)
    else:
        ring = f.ring
        reducer = Reducer(ring)
        for g in G:
            if g.ring != ring:
                raise ContextMismatch("Divisors must live in the ring of the dividend")
            if g:
                reducer.add(g.monic())
    if f.ring != ring:
        raise ContextMismatch(
            f"Cannot reduce a polynomial in {f.ring.describe_variables()} "
            f"by a basis in {ring.describe_variables()}"
        )
    return Polynomial._wrap(ring, reducer.reduce(f.as_dict()))


def spoly(f: Polynomial, g: Polynomial) -> Polynomial:
    """S-polynomial of two monic polynomials."""
    if f.ring != g.ring:
        raise ContextMismatch("S-polynomial of polynomials in different rings")
    ring = f.ring
    lmf, lmg = f.leading_monomial, g.leading_monomial
    lcm = ring.lcm(lmf, lmg)
    return f.monic().mul_monomial(lcm - lmf) - g.monic().mul_monomial(lcm - lmg)


class _PairSet:
    """Critical pairs with the Gebauer-Moeller update."""

    def __init__(self, ring: RingContext):
        self.ring = ring
        self.pairs: Dict[Pair, int] = {}

    def degrees(self) -> Set[int]:
        return {self.ring.degree(lcm) for lcm in self.pairs.values()}

    def take_degree(self, d: int) -> List[Tuple[Pair, int]]:
        """Remove and return the pairs of lcm degree d, ordered by indices."""
        ring = self.ring
        chosen = sorted((pair, lcm) for pair, lcm in self.pairs.items() if ring.degree(lcm) == d)
        for pair, _ in chosen:
            del self.pairs[pair]
        return chosen

    def drop_above(self, d: int) -> int:
        ring = self.ring
        doomed = [pair for pair, lcm in self.pairs.items() if ring.degree(lcm) > d]
        for pair in doomed:
            del self.pairs[pair]
        return len(doomed)

    def update(self, leading: List[int], new: int) -> None:
        """Register basis element ``new`` whose leading monomial is leading[new]."""
        ring = self.ring
        lm_new = leading[new]

        # chain criterion on existing pairs
        kept = {}
        for (i, j), lcm in self.pairs.items():
            if (not ring.divides(lm_new, lcm)
                    or lcm == ring.lcm(leading[i], lm_new)
                    or lcm == ring.lcm(leading[j], lm_new)):
                kept[(i, j)] = lcm
        self.pairs = kept

        by_lcm: Dict[int, List[int]] = {}
        for i in range(new):
            by_lcm.setdefault(ring.lcm(leading[i], lm_new), []).append(i)

        minimal: List[int] = []
        for lcm in sorted(by_lcm):
            if all(not ring.divides(other, lcm) for other in minimal):
                minimal.append(lcm)

        for lcm in minimal:
            # product criterion: coprime leading monomials give a zero S-pair
            if any(lcm == leading[i] + lm_new for i in by_lcm[lcm]):
                continue
            self.pairs[(min(by_lcm[lcm]), new)] = lcm


def _validate_generators(generators: Sequence[Polynomial],
                         ring: Optional[RingContext]) -> Tuple[RingContext, List[Polynomial]]:
    if ring is None:
        if not generators:
            raise ValueError("A ring is required when no generators are given")
        ring = generators[0].ring
    kept = []
    for k, f in enumerate(generators):
        if f.ring != ring:
            raise ContextMismatch(f"Generator {k + 1} lives in a different ring")
        if not f.is_homogeneous():
            raise NonHomogeneousInput(f"Generator {k + 1} is not homogeneous: {f}")
        if f.is_zero():
            logger.debug(f"Skipping zero generator {k + 1}")
            continue
        kept.append(f)
    return ring, kept


def _next_standard_layer(ring: RingContext, previous: List[int], reducer: Reducer) -> List[int]:
    """Standard monomials of degree d+1 from those of degree d."""
    variables = [ring.variable_code(j) for j in range(ring.n)]
    layer = {m + v for m in previous for v in variables}
    return sorted((m for m in layer if reducer.find(m) is None), reverse=True)


def buchberger(generators: Sequence[Polynomial], ring: Optional[RingContext] = None,
               max_degree: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    Args:
        generators: Homogeneous generators (zero generators are ignored)
        ring: Ring context; defaults to the generators' ring
        max_degree: Stop after this degree; the basis is then marked incomplete
            if anything of higher degree was still pending

    Returns:
        The reduced basis, sorted ascending by leading monomial

    Raises:
        NonHomogeneousInput: a generator is not homogeneous
        ContextMismatch: generators live in different rings
    """
    ring, inputs = _validate_generators(generators, ring)

    pending: Dict[int, List[Polynomial]] = {}
    for f in inputs:
        pending.setdefault(f.degree, []).append(f)

    reducer = Reducer(ring)
    pairs = _PairSet(ring)
    considered = 0
    zero_reductions = 0
    complete = True
    early_stop = None

    standard_layer: List[int] = [ring.one()]
    layer_degree = 0

    def insert(poly: Polynomial) -> None:
        index = reducer.add(poly.monic())
        pairs.update(reducer.leading, index)

    while pending or pairs.pairs:
        d = min(set(pending) | pairs.degrees())
        if max_degree is not None and d > max_degree:
            logger.info(f"Degree cap {max_degree} reached with work pending; basis is incomplete")
            complete = False
            break

        # standard monomials of the degrees skipped so far
        stop = False
        while layer_degree < d - 1:
            standard_layer = _next_standard_layer(ring, standard_layer, reducer)
            layer_degree += 1
            if not standard_layer:
                stop = True
                break
        if stop:
            early_stop = layer_degree
            break

        for f in pending.pop(d, []):
            r = reducer.reduce(f.as_dict())
            if r:
                insert(Polynomial._wrap(ring, r))

        degree_pairs = pairs.take_degree(d)
        for (i, j), _ in degree_pairs:
            considered += 1
            s = spoly(reducer.polynomials[i], reducer.polynomials[j])
            r = reducer.reduce(s.as_dict())
            if r:
                insert(Polynomial._wrap(ring, r))
            else:
                zero_reductions += 1

        logger.debug(
            f"Degree {d}: {len(degree_pairs)} pairs, basis size {len(reducer)}, "
            f"{len(pairs.pairs)} pairs pending"
        )

        if d == 0:
            standard_layer = [] if reducer.find(ring.one()) is not None else [ring.one()]
        else:
            while layer_degree < d:
                standard_layer = _next_standard_layer(ring, standard_layer, reducer)
                layer_degree += 1
        if not standard_layer:
            early_stop = d
            break

    if early_stop is not None:
        dropped = pairs.drop_above(early_stop)
        dropped_generators = sum(len(v) for k, v in pending.items() if k > early_stop)
        logger.debug(
            f"All monomials of degree {early_stop} are leading monomials; "
            f"dropping {dropped} pairs and {dropped_generators} generators of higher degree"
        )

    basis = interreduce(ring, reducer)
    logger.info(
        f"Groebner basis: {len(basis)} elements, max degree "
        f"{max((g.degree for g in basis), default=0)}, {considered} pairs "
        f"({zero_reductions} reduced to zero)"
    )
    return GroebnerBasis(
        ring=ring,
        polynomials=basis,
        reduced=True,
        complete=complete,
        pairs_considered=considered,
        pairs_reduced_to_zero=zero_reductions,
        early_stop_degree=early_stop,
    )


def interreduce(ring: RingContext, reducer: Reducer) -> List[Polynomial]:
    """Minimal and reduced basis from the elements collected by ``reducer``."""
    leading = reducer.leading
    minimal = []
    for k, lm in enumerate(leading):
        if not any(ring.divides(other, lm) for j, other in enumerate(leading)
                   if j != k and (other != lm or j < k)):
            minimal.append(k)

    final = Reducer(ring)
    for k in sorted(minimal, key=lambda k: leading[k]):
        final.add(reducer.polynomials[k])

    basis = []
    for poly in final.polynomials:
        terms = poly.term_codes()
        lm, lc = terms[0]
        tail = final.reduce(dict(terms[1:]))
        tail[lm] = lc
        basis.append(Polynomial._wrap(ring, tail))
    return basis


def verify_buchberger_criterion(G: GroebnerBasis) -> bool:
    """True if every S-polynomial of basis pairs reduces to zero."""
    polys = G.polynomials
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if normal_form(spoly(polys[i], polys[j]), G):
                logger.debug(f"S-pair ({i}, {j}) does not reduce to zero")
                return False
    return True


def is_artinian(J: MonomialIdeal) -> bool:
    """True if the quotient by J is finite-dimensional."""
    return J.is_artinian()
