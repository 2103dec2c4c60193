"""Constructors for coinvariant ideals: H4 and small oracle families."""

import logging
import re
from typing import List, Optional, Sequence

from sympy import factorial, multiplicity

from src.lib.polynomial_text import parse_polynomial
from src.models.errors import ParseError
from src.models.field import FieldSpec, make_field, tau_polynomial_root
from src.models.ideal_spec import CoinvariantIdealSpec, RootList
from src.models.polynomial import Polynomial, power_sums
from src.models.report import CandidateElement
from src.models.ring import RingContext
from src.models.substitution import LinearSubstitution
from src.services.persistence import TableStore, default_store

logger = logging.getLogger(__name__)

H4_DEGREES = (2, 12, 20, 30)
# smallest prime above the socle degree 60
H4_DEFAULT_PRIME = 61
DEFAULT_PRIME = 13
H4_ROOT_COUNT = 60
NATURAL_VARIABLES = ('x1', 'x2', 'x3', 'x4')
NU_VARIABLES = ('v1', 'v2', 'v3', 'l')

# x_k in terms of v1, v2, v3, l
_NU_IMAGES = (
    "v1",
    "v2 - tau^2*v1",
    "v3 - tau^2*v2",
    "l - v3 - (tau + 1)*v2 - (tau + 1)*v1",
)

_TYPE_A_RE = re.compile(r"^a(\d+)$")
_CI_RE = re.compile(r"^ci:(\d+(?:,\d+)*)$")


def natural_ring(field_spec: FieldSpec) -> RingContext:
    """K[x1, x2, x3, x4] with grevlex."""
    return RingContext(field_spec, NATURAL_VARIABLES)


def nu_ring(field_spec: FieldSpec) -> RingContext:
    """K[v1, v2, v3, l] with grevlex v1 > v2 > v3 > l."""
    return RingContext(field_spec, NU_VARIABLES)


def h4_positive_roots(field_spec: FieldSpec, store: Optional[TableStore] = None) -> RootList:
    """The 60 positive roots of H4 as linear forms in x1..x4."""
    store = store or default_store()
    table = store.load_root_table()
    ring = RingContext(field_spec, tuple(table['variables']))
    roots = RootList(ring, tuple(parse_polynomial(text, ring) for text in table['roots']))
    if len(roots) != H4_ROOT_COUNT:
        raise ValueError(f"Expected {H4_ROOT_COUNT} roots, the table has {len(roots)}")
    return roots


def nu_substitution(field_spec: FieldSpec) -> LinearSubstitution:
    """x -> (v1, v2, v3, l); its inverse sends v_k to nu_k and l to lambda."""
    source = natural_ring(field_spec)
    target = nu_ring(field_spec)
    images = [parse_polynomial(text, target) for text in _NU_IMAGES]
    return LinearSubstitution.from_images(source, target, images)


def nu_forms(field_spec: FieldSpec) -> List[Polynomial]:
    """nu_1..nu_4 as linear forms in x1..x4 (nu_4 is the image of l - v1 - v2 - v3)."""
    inverse = nu_substitution(field_spec).inverse()
    target = inverse.source
    v1, v2, v3, l = (Polynomial.variable(target, name) for name in NU_VARIABLES)
    return [inverse.apply_to_form(form) for form in (v1, v2, v3, l - v1 - v2 - v3)]


def lambda_form(field_spec: FieldSpec) -> Polynomial:
    """The candidate lambda = nu_1 + nu_2 + nu_3 + nu_4 in x1..x4."""
    inverse = nu_substitution(field_spec).inverse()
    return inverse.apply_to_form(Polynomial.variable(inverse.source, 'l'))


def h4_natural_ideal(field_spec: FieldSpec, store: Optional[TableStore] = None) -> CoinvariantIdealSpec:
    """I2, I12, I20, I30 in x1..x4 with lambda as the candidate."""
    roots = h4_positive_roots(field_spec, store)
    generators = power_sums(list(roots), H4_DEGREES)
    return CoinvariantIdealSpec(
        name='h4-natural',
        ring=roots.ring,
        generators=tuple(generators),
        candidate=CandidateElement(lambda_form(field_spec)),
        complete_intersection=True,
    )


def h4_coinvariant_ideal(field_spec: FieldSpec, store: Optional[TableStore] = None) -> CoinvariantIdealSpec:
    """The H4 coinvariant ideal in v1, v2, v3, l with candidate l.

    The roots are substituted first and the power sums are taken afterwards;
    both orders agree because substitution is a ring homomorphism.
    """
    roots = h4_positive_roots(field_spec, store)
    substitution = nu_substitution(field_spec)
    moved = [substitution.apply_to_form(root) for root in roots]
    generators = power_sums(moved, H4_DEGREES)
    logger.info(
        f"Built H4 ideal over {field_spec.describe()}: degrees "
        f"{', '.join(str(g.degree) for g in generators)}, "
        f"{sum(len(g) for g in generators)} terms"
    )
    return CoinvariantIdealSpec(
        name='h4',
        ring=substitution.target,
        generators=tuple(generators),
        complete_intersection=True,
    )


def elementary_symmetric(ring: RingContext) -> List[Polynomial]:
    """e_1, ..., e_n in the variables of ``ring``."""
    n = ring.n
    e = [Polynomial.constant(ring, 1)] + [Polynomial.zero(ring)] * n
    for i in range(n):
        x = Polynomial.variable(ring, i)
        for k in range(i + 1, 0, -1):
            e[k] = e[k] + e[k - 1] * x
    return e[1:]


def type_a_coinvariant_ideal(n: int, field_spec: FieldSpec) -> CoinvariantIdealSpec:
    """Ideal of e_1..e_n in x1..xn; the quotient has dimension n!."""
    if n < 2:
        raise ParseError(f"Type A coinvariants need n >= 2, got: {n}")
    ring = RingContext(field_spec, tuple(f"x{i + 1}" for i in range(n)))
    return CoinvariantIdealSpec(
        name=f"a{n}",
        ring=ring,
        generators=tuple(elementary_symmetric(ring)),
        complete_intersection=True,
    )


def monomial_ci_ideal(exponents: Sequence[int], field_spec: FieldSpec) -> CoinvariantIdealSpec:
    """The monomial complete intersection <x1^a1, ..., xn^an>."""
    if not exponents or any(a < 1 for a in exponents):
        raise ParseError(f"Exponents must be positive, got: {list(exponents)}")
    ring = RingContext(field_spec, tuple(f"x{i + 1}" for i in range(len(exponents))))
    generators = []
    for i, a in enumerate(exponents):
        powers = [0] * len(exponents)
        powers[i] = a
        generators.append(Polynomial.monomial(ring, ring.encode(powers)))
    return CoinvariantIdealSpec(
        name="ci:" + ",".join(str(a) for a in exponents),
        ring=ring,
        generators=tuple(generators),
        complete_intersection=True,
    )


def h4_field(p: int) -> FieldSpec:
    """F_p when tau^2 - tau - 1 splits mod p, else F_p[tau]/(tau^2 - tau - 1)."""
    prime_field = make_field(p)
    if tau_polynomial_root(p) is not None:
        return prime_field
    return make_field(p, extend=True)


def top_power_vanishes(degrees: Sequence[int], p: int) -> bool:
    """True when p divides N! / (d_1! ... d_k!) with N = sum(d_i - 1).

    In the coinvariant algebra of a reflection group with degrees d_i the top
    power l^N of a linear form is this constant times a socle class, so in
    such a characteristic l^N = 0 for every l and the strong property fails
    in the pair (0, N).
    """
    top = sum(d - 1 for d in degrees)
    return multiplicity(p, factorial(top)) > sum(multiplicity(p, factorial(d)) for d in degrees)


def _warn_if_top_power_vanishes(name: str, degrees: Sequence[int], p: int) -> None:
    if top_power_vanishes(degrees, p):
        logger.warning(
            f"{name}: characteristic {p} divides the top-degree constant "
            f"{sum(d - 1 for d in degrees)}!/({'! '.join(str(d) for d in degrees)}!), "
            f"so no linear form can pass the strong check"
        )


def spec_from_selector(selector: str, prime: Optional[int] = None,
                       store: Optional[TableStore] = None) -> CoinvariantIdealSpec:
    """Build a spec from a ``h4``, ``a<n>`` or ``ci:<a1,...>`` selector.

    H4 uses the quadratic extension when tau^2 - tau - 1 is irreducible mod p
    and F_p otherwise; the other families use F_p. ``prime`` None picks
    H4_DEFAULT_PRIME for H4 and DEFAULT_PRIME for the rest.
    """
    text = selector.strip().lower()
    if text == 'h4':
        p = prime or H4_DEFAULT_PRIME
        field_spec = h4_field(p)
        _warn_if_top_power_vanishes('h4', H4_DEGREES, p)
        return h4_coinvariant_ideal(field_spec, store)
    prime = prime or DEFAULT_PRIME
    match = _TYPE_A_RE.match(text)
    if match:
        n = int(match.group(1))
        spec = type_a_coinvariant_ideal(n, make_field(prime))
        _warn_if_top_power_vanishes(spec.name, range(1, n + 1), prime)
        return spec
    match = _CI_RE.match(text)
    if match:
        return monomial_ci_ideal([int(a) for a in match.group(1).split(',')], make_field(prime))
    raise ParseError(f"Unknown ideal type {selector!r} (expected h4, a<n> or ci:<a1,...>)")
