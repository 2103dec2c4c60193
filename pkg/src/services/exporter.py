"""Service for exporting reports, Groebner bases and Hilbert functions."""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from src.models.groebner import GroebnerBasis, HilbertFunction
from src.models.ideal_file import IdealFile
from src.models.report import CURRENT_VERSION, LefschetzReport, ReportDocument, validate_report_dict
from src.models.ring import RingContext
from src.services.persistence import TableStore, default_store

logger = logging.getLogger(__name__)


def build_document(
    report: LefschetzReport,
    ring: RingContext,
    input_hash: str,
    tool_version: str,
) -> ReportDocument:
    """Wrap a report with the provenance of the run that produced it.

    Args:
        report: Lefschetz report
        ring: Ring of the input ideal (gives prime and field)
        input_hash: sha256 of the canonical input text
        tool_version: Package version
    """
    return ReportDocument(
        report=report,
        input_hash=input_hash,
        prime=ring.field.p,
        field=ring.field.describe(),
        tool_version=tool_version,
        version=CURRENT_VERSION,
    )


def validate_documents(documents: Sequence[ReportDocument],
                       store: Optional[TableStore] = None) -> None:
    """Check documents against the shipped JSON Schema.

    Raises:
        ParseError: a document does not match the schema
    """
    schema = (store or default_store()).load_report_schema()
    for document in documents:
        validate_report_dict(document.to_dict(), schema)


def render_json(documents: Sequence[ReportDocument]) -> str:
    """One document as an object; several as {"runs": [...]}."""
    if len(documents) == 1:
        data: Dict[str, Any] = documents[0].to_dict()
    else:
        data = {'runs': [d.to_dict() for d in documents]}
    return json.dumps(data, indent=2)


def render_summary(document: ReportDocument) -> str:
    """Short human-readable summary of one run."""
    report = document.report
    lines = [
        f"{report.mode.capitalize()} Lefschetz: {'PASS' if report.verdict else 'FAIL'} "
        f"(candidate {report.candidate} over {document.field})",
        f"Hilbert function: {' '.join(str(h) for h in report.hilbert)} "
        f"({'symmetric' if report.symmetric else 'not symmetric'}, socle {report.socle})",
        f"Checks: {len(report.checks)} on the {report.path} path",
    ]
    failure = report.first_failure
    if failure is not None:
        check = next(c for c in report.checks if not c.passed)
        lines.append(
            f"First failure: i={failure['i']}, s={failure['s']}, rank {check.rank} "
            f"of {check.expected}" + (f", witness {check.witness}" if check.witness else "")
        )
    if report.gb_stats is not None:
        stats = report.gb_stats
        lines.append(
            f"Groebner basis: {stats.size} elements, max degree {stats.max_degree}, "
            f"{stats.pairs_considered} pairs ({stats.pairs_reduced_to_zero} to zero)"
        )
    if report.oracle is not None:
        lines.append(f"Brute-force oracle: {'PASS' if report.oracle else 'FAIL'}")
    return "\n".join(lines)


def gb_dump_text(basis: GroebnerBasis) -> str:
    """The basis in ideal-file grammar: header, then one element per line."""
    return IdealFile.from_polynomials(basis.ring, basis.polynomials).to_text()


def write_gb_dump(basis: GroebnerBasis, output_path: Path) -> None:
    """Write the basis dump to a file."""
    IdealFile.from_polynomials(basis.ring, basis.polynomials).write(Path(output_path))
    logger.info(f"Wrote {len(basis.polynomials)} basis elements to {output_path}")


def hilbert_text(hilbert: HilbertFunction) -> str:
    """'1 2 3 2 1' and 'symmetric: yes|no' on separate lines."""
    return f"{hilbert}\nsymmetric: {'yes' if hilbert.is_symmetric() else 'no'}"


def hilbert_dict(hilbert: HilbertFunction) -> Dict[str, Any]:
    return {
        'hilbert': hilbert.to_list(),
        'symmetric': hilbert.is_symmetric(),
        'socle': hilbert.socle_degree,
    }


def exit_code(documents: List[ReportDocument]) -> int:
    """0 when every run passes, 1 otherwise."""
    return 0 if all(d.report.verdict for d in documents) else 1
