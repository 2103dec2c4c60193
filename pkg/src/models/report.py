"""Data models for Lefschetz reports and their JSON documents."""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Literal, Optional

import jsonschema

from src.models.errors import NotLinear, ParseError, ZeroCandidate
from src.models.polynomial import Polynomial
from src.models.ring import RingContext

# Current report schema version
CURRENT_VERSION = "1.0"

Mode = Literal['strong', 'weak']
CheckPath = Literal['symmetric', 'general']

DETERMINISM_NOTE = (
    "exact finite-field computation without randomness; "
    "all fields except timings are reproducible"
)


@dataclass(frozen=True)
class CandidateElement:
    """A candidate Lefschetz element l = sum(c_i x_i).

    Attributes:
        form: Nonzero linear form in the ring under test
    """

    form: Polynomial

    def __post_init__(self):
        """Reject zero and nonlinear candidates."""
        if self.form.is_zero():
            raise ZeroCandidate("The candidate Lefschetz element is zero")
        if not self.form.is_linear():
            raise NotLinear(f"A Lefschetz candidate must be a linear form, got: {self.form}")

    @property
    def ring(self) -> RingContext:
        return self.form.ring

    @property
    def is_last_variable(self) -> bool:
        """True when l is exactly x_n."""
        ring = self.form.ring
        return self.form.as_dict() == {ring.variable_code(ring.n - 1): 1}

    @property
    def text(self) -> str:
        return str(self.form)


@dataclass
class DegreeCheck:
    """Outcome of one full-rank check of multiplication by l^s on degree i.

    Attributes:
        i: Source degree
        s: Power of the Lefschetz element
        passed: True when the map has full rank
        rank: Rank found
        expected: min(h_i, h_{i+s})
        witness: Text of an offending monomial when the check failed
    """

    i: int
    s: int
    passed: bool
    rank: int
    expected: int
    witness: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        """Convert check to dictionary for JSON serialization."""
        result = {
            'i': self.i,
            's': self.s,
            'pass': self.passed,
            'rank': self.rank,
            'expected': self.expected,
        }
        if self.witness is not None:
            result['witness'] = self.witness
        return result


@dataclass
class GroebnerStats:
    """Size figures of a Groebner basis computation."""
    size: int
    max_degree: int
    pairs_considered: int = 0
    pairs_reduced_to_zero: int = 0
    complete: bool = True

    def to_dict(self) -> Dict[str, Any]:
        return {
            'size': self.size,
            'maxdeg': self.max_degree,
            'pairs_considered': self.pairs_considered,
            'pairs_reduced_to_zero': self.pairs_reduced_to_zero,
            'complete': self.complete,
        }


@dataclass
class LefschetzReport:
    """Result of a strong or weak Lefschetz check.

    Attributes:
        mode: 'strong' or 'weak'
        verdict: Overall result
        hilbert: Hilbert function h_0..h_c
        symmetric: Whether the Hilbert function is symmetric
        socle: Socle degree c
        path: 'symmetric' (bijection shortcut) or 'general' (all (i, s))
        checks: Per-degree checks in ascending (i, s) order
        gb_stats: Groebner basis figures
        candidate: Text of the Lefschetz element in the input ring
        variables: Variables of the ring the criterion ran in
        first_failure: {'i', 's'} of the first failing check, if any
        oracle: Brute-force verdict when requested
        timings: Wall-clock seconds per phase
        basis: Groebner basis the checks ran on (not serialized)
    """

    mode: Mode
    verdict: bool
    hilbert: List[int]
    symmetric: bool
    socle: int
    path: CheckPath
    checks: List[DegreeCheck] = field(default_factory=list)
    gb_stats: Optional[GroebnerStats] = None
    candidate: str = ""
    variables: List[str] = field(default_factory=list)
    oracle: Optional[bool] = None
    timings: Dict[str, float] = field(default_factory=dict)
    basis: Any = field(default=None, repr=False, compare=False)

    @property
    def first_failure(self) -> Optional[Dict[str, int]]:
        for check in self.checks:
            if not check.passed:
                return {'i': check.i, 's': check.s}
        return None

    @property
    def dimension(self) -> int:
        return sum(self.hilbert)

    def to_dict(self) -> Dict[str, Any]:
        """Convert report to dictionary for JSON serialization."""
        return {
            'verdict': self.verdict,
            'mode': self.mode,
            'path': self.path,
            'candidate': self.candidate,
            'variables': list(self.variables),
            'hilbert': list(self.hilbert),
            'symmetric': self.symmetric,
            'socle': self.socle,
            'dimension': self.dimension,
            'checks': [c.to_dict() for c in self.checks],
            'first_failure': self.first_failure,
            'gb_stats': self.gb_stats.to_dict() if self.gb_stats else None,
            'oracle': self.oracle,
            'timings': {k: round(v, 6) for k, v in self.timings.items()},
        }


@dataclass
class ReportDocument:
    """A serialized report with provenance.

    Attributes:
        report: The Lefschetz report
        input_hash: sha256 of the canonical input text
        prime: Field characteristic
        field: Field description, e.g. 'GF(13^2) tau^2-tau-1'
        tool_version: Package version that produced the report
        version: Report schema version
    """

    report: LefschetzReport
    input_hash: str
    prime: int
    field: str
    tool_version: str
    version: str = CURRENT_VERSION

    def to_dict(self) -> Dict[str, Any]:
        """Convert document to dictionary for JSON serialization."""
        result = {
            'version': self.version,
            'tool_version': self.tool_version,
            'input_hash': self.input_hash,
            'prime': self.prime,
            'field': self.field,
            'determinism': DETERMINISM_NOTE,
        }
        result.update(self.report.to_dict())
        return result

    def non_timing_dict(self) -> Dict[str, Any]:
        """Everything that must be identical across re-runs."""
        data = self.to_dict()
        data.pop('timings', None)
        return data


def validate_report_dict(data: Dict[str, Any], schema: Dict[str, Any]) -> None:
    """Validate a report document against the shipped JSON Schema.

    Raises:
        ParseError: the document does not match the schema
    """
    try:
        jsonschema.validate(instance=data, schema=schema)
    except jsonschema.ValidationError as e:
        where = "/".join(str(part) for part in e.absolute_path) or "<document>"
        raise ParseError(f"Report does not match schema at {where}: {e.message}") from None
