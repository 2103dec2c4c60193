"""Lefschetz checks through the initial ideal of a graded reverse lex basis.

Under grevlex with the candidate as the last variable x_n, multiplication by
x_n^s on the quotient has the same rank as on the quotient by the initial
ideal. There it sends standard monomials to monomials, so the rank is the
number of m in S_i with m * x_n^s still standard.
"""

import logging
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from src.lib import field_linalg
from src.models.errors import ContextMismatch, NotArtinian, WrongTermOrder
from src.models.groebner import GroebnerBasis, HilbertFunction, StandardMonomialBasis
from src.models.ideal_spec import CoinvariantIdealSpec
from src.models.monomial_ideal import MonomialIdeal
from src.models.polynomial import Polynomial
from src.models.report import CandidateElement, DegreeCheck, LefschetzReport
from src.models.ring import RingContext
from src.models.substitution import LinearSubstitution, substitute
from src.services.groebner import buchberger
from src.services.standard_monomials import hilbert_function, initial_ideal, standard_monomials

logger = logging.getLogger(__name__)


@dataclass
class QuotientAnalysis:
    """Groebner basis, initial ideal and standard monomials of one ideal.

    Attributes:
        ring: Ring context
        basis: Reduced Groebner basis
        initial: Initial ideal
        standard: Standard monomial basis of the quotient
        hilbert: Hilbert function
        timings: Seconds spent in 'groebner' and 'standard_monomials'
    """

    ring: RingContext
    basis: GroebnerBasis
    initial: MonomialIdeal
    standard: StandardMonomialBasis
    hilbert: HilbertFunction
    timings: Dict[str, float] = field(default_factory=dict)


def analyze_quotient(generators: Sequence[Polynomial], ring: RingContext,
                     max_degree: Optional[int] = None) -> QuotientAnalysis:
    """Compute everything the checks need about R/I.

    Raises:
        NotArtinian: the quotient is infinite-dimensional, or the degree cap
            is below the socle degree
    """
    started = time.perf_counter()
    basis = buchberger(generators, ring, max_degree=max_degree)
    groebner_seconds = time.perf_counter() - started

    started = time.perf_counter()
    initial = initial_ideal(basis)
    standard = standard_monomials(initial, ring, max_degree=max_degree)
    if not standard.complete:
        raise NotArtinian(
            f"Standard monomials remain in degree {max_degree}; "
            f"raise the degree cap or check that the quotient is Artinian"
        )
    hilbert = hilbert_function(standard)
    standard_seconds = time.perf_counter() - started

    logger.info(
        f"Quotient: dimension {standard.dimension}, socle degree {standard.socle_degree}, "
        f"Hilbert function {'symmetric' if hilbert.is_symmetric() else 'not symmetric'}"
    )
    return QuotientAnalysis(
        ring=ring,
        basis=basis,
        initial=initial,
        standard=standard,
        hilbert=hilbert,
        timings={'groebner': groebner_seconds, 'standard_monomials': standard_seconds},
    )


def _require_grevlex(ring: RingContext) -> None:
    if not ring.is_grevlex:
        raise WrongTermOrder(
            f"Lefschetz checks need the graded reverse lexicographic order, "
            f"got {ring.order.value}"
        )


def _multiplication_check(standard: StandardMonomialBasis, hilbert: HilbertFunction,
                          i: int, s: int) -> DegreeCheck:
    """Full-rank check of multiplication by x_n^s from degree i."""
    ring = standard.ring
    shift = ring.variable_code(ring.n - 1) * s
    source = standard.layer(i)
    images = []
    first_lost = None
    for m in source:
        image = m + shift
        if standard.is_standard(image):
            images.append(image)
        elif first_lost is None:
            first_lost = m

    rank = len(images)
    expected = min(hilbert[i], hilbert[i + s])
    passed = rank == expected
    witness = None
    if not passed:
        if hilbert[i] <= hilbert[i + s]:
            witness = ring.format_monomial(first_lost)
        else:
            hit = set(images)
            missed = next(m for m in standard.layer(i + s) if m not in hit)
            witness = ring.format_monomial(missed)
    return DegreeCheck(i=i, s=s, passed=passed, rank=rank, expected=expected, witness=witness)


def combinatorial_rank(basis: StandardMonomialBasis, i: int, s: int) -> int:
    """|{m in S_i : m * x_n^s in S_(i+s)}|."""
    ring = basis.ring
    shift = ring.variable_code(ring.n - 1) * s
    return sum(1 for m in basis.layer(i) if basis.is_standard(m + shift))


def _degree_checks(analysis: QuotientAnalysis, weak: bool) -> Tuple[str, List[DegreeCheck]]:
    standard, hilbert = analysis.standard, analysis.hilbert
    c = hilbert.socle_degree
    checks: List[DegreeCheck] = []
    if not weak and hilbert.is_symmetric():
        for i in range((c + 1) // 2):
            checks.append(_multiplication_check(standard, hilbert, i, c - 2 * i))
        return 'symmetric', checks

    powers = [1] if weak else range(1, c + 1)
    for i in range(c):
        for s in powers:
            if i + s > c:
                break
            checks.append(_multiplication_check(standard, hilbert, i, s))
    return 'general', checks


def _run_last_variable(generators: Sequence[Polynomial], ring: RingContext, weak: bool,
                       max_degree: Optional[int]) -> LefschetzReport:
    _require_grevlex(ring)
    analysis = analyze_quotient(generators, ring, max_degree=max_degree)

    started = time.perf_counter()
    path, checks = _degree_checks(analysis, weak)
    check_seconds = time.perf_counter() - started

    for check in checks:
        logger.debug(
            f"x_n^{check.s}: S_{check.i} -> S_{check.i + check.s}: rank {check.rank} of "
            f"{check.expected} ({'ok' if check.passed else 'FAIL'})"
        )
    verdict = all(check.passed for check in checks)
    mode = 'weak' if weak else 'strong'
    logger.info(
        f"{mode.capitalize()} Lefschetz check ({path}, {len(checks)} checks): "
        f"{'passed' if verdict else 'failed'}"
    )

    timings = dict(analysis.timings)
    timings['degree_checks'] = check_seconds
    return LefschetzReport(
        mode=mode,
        verdict=verdict,
        hilbert=analysis.hilbert.to_list(),
        symmetric=analysis.hilbert.is_symmetric(),
        socle=analysis.hilbert.socle_degree,
        path=path,
        checks=checks,
        gb_stats=analysis.basis.stats(),
        candidate=ring.variables[-1],
        variables=list(ring.variables),
        timings=timings,
        basis=analysis.basis,
    )


def check_slp_last_variable(spec: CoinvariantIdealSpec,
                            max_degree: Optional[int] = None) -> LefschetzReport:
    """Strong Lefschetz check with the last variable as the candidate.

    Raises:
        WrongTermOrder: the ring is not graded reverse lexicographic
        NotArtinian: the quotient is infinite-dimensional
    """
    return _run_last_variable(spec.generators, spec.ring, weak=False, max_degree=max_degree)


def check_wlp_last_variable(spec: CoinvariantIdealSpec,
                            max_degree: Optional[int] = None) -> LefschetzReport:
    """Weak Lefschetz check (s = 1 only) with the last variable."""
    return _run_last_variable(spec.generators, spec.ring, weak=True, max_degree=max_degree)


def _fresh_name(taken: Sequence[str], base: str = 'l') -> str:
    if base not in taken:
        return base
    k = 0
    while f"{base}{k}" in taken:
        k += 1
    return f"{base}{k}"


def completing_substitution(ring: RingContext, l: Union[Polynomial, CandidateElement]) -> LinearSubstitution:
    """Change of variables that turns l into the last variable.

    The pivot is the last variable with a nonzero coefficient in l. The new
    variables are the old ones except the pivot, in order, followed by l
    (named 'l' unless that name is taken).
    """
    form = l.form if isinstance(l, CandidateElement) else CandidateElement(l).form
    coefficients = form.coefficient_codes()
    n = ring.n
    pivot = max(k for k, c in enumerate(coefficients) if c)

    kept = [k for k in range(n) if k != pivot]
    rows = [[int(j == k) for j in range(n)] for k in kept]
    rows.append(list(coefficients))

    names = [ring.variables[k] for k in kept]
    names.append(_fresh_name(names))
    target = RingContext(ring.field, tuple(names), ring.order)

    images = field_linalg.inverse(ring.field, rows)
    return LinearSubstitution(ring, target, tuple(tuple(row) for row in images))


def check_slp_candidate(generators: Sequence[Polynomial], ring: RingContext,
                        l: Union[Polynomial, CandidateElement], weak: bool = False,
                        max_degree: Optional[int] = None) -> LefschetzReport:
    """Lefschetz check of an arbitrary linear form l.

    The generators are moved by ``completing_substitution`` so that l becomes
    the last variable; the verdict is about l in the original ring.

    Raises:
        ZeroCandidate: l is zero
        WrongTermOrder: the ring is not graded reverse lexicographic
    """
    candidate = l if isinstance(l, CandidateElement) else CandidateElement(l)
    if candidate.ring != ring:
        raise ContextMismatch("The candidate does not live in the ring of the generators")
    _require_grevlex(ring)
    if candidate.is_last_variable:
        report = _run_last_variable(generators, ring, weak, max_degree)
        report.candidate = candidate.text
        return report

    substitution = completing_substitution(ring, candidate)
    moved = [substitute(g, substitution) for g in generators]
    logger.debug(
        f"Moved candidate {candidate.text} to the last variable of "
        f"{substitution.target.describe_variables()}"
    )
    report = _run_last_variable(moved, substitution.target, weak, max_degree)
    report.candidate = candidate.text
    return report


def check_spec(spec: CoinvariantIdealSpec, weak: bool = False,
               max_degree: Optional[int] = None) -> LefschetzReport:
    """Check the ideal's own candidate (the last variable unless set)."""
    return check_slp_candidate(spec.generators, spec.ring, spec.candidate, weak=weak,
                               max_degree=max_degree)
