"""CLI entry point for the slpcheck Lefschetz property checker."""

import json
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

import click

from src import __version__
from src.lib.polynomial_text import parse_polynomial
from src.models.errors import AlgebraError
from src.models.ideal_file import IdealFile
from src.models.ideal_spec import CoinvariantIdealSpec
from src.models.report import CandidateElement, ReportDocument
from src.services import exporter
from src.services.coxeter import DEFAULT_PRIME, H4_DEFAULT_PRIME, spec_from_selector
from src.services.groebner import buchberger
from src.services.lefschetz import analyze_quotient, check_spec
from src.services.persistence import TableStore
from src.services.rank_oracle import brute_force_verdict

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(levelname)s: %(message)s',
)
logger = logging.getLogger(__name__)


class Context:
    """CLI context object holding shared state."""

    def __init__(self):
        self.verbose: bool = False
        self.quiet: bool = False
        self.json_output: bool = False
        self.store: Optional[TableStore] = None

    def get_store(self) -> TableStore:
        """Get or create the data table store."""
        if self.store is None:
            self.store = TableStore()
        return self.store

    def load_spec(self, ideal_type: Optional[str], ideal_path: Optional[str],
                  prime: Optional[int], candidate: Optional[str] = None
                  ) -> Tuple[CoinvariantIdealSpec, str]:
        """Build the ideal under test and the hash of its canonical text.

        ``prime`` None means the default prime for --type and the file's own
        field for --ideal.
        """
        if ideal_path:
            ideal_file = IdealFile.read(Path(ideal_path), prime=prime)
            spec = ideal_file.to_spec()
        else:
            spec = spec_from_selector(ideal_type, prime, self.get_store())
            ideal_file = IdealFile.from_polynomials(spec.ring, spec.generators)

        if candidate:
            spec = spec.with_candidate(CandidateElement(parse_polynomial(candidate, spec.ring)))
            ideal_file = IdealFile.from_polynomials(spec.ring, spec.generators, spec.candidate.form)
        return spec, ideal_file.input_hash()


pass_context = click.make_pass_decorator(Context, ensure=True)


def _require_source(ideal_type: Optional[str], ideal_path: Optional[str]) -> None:
    if bool(ideal_type) == bool(ideal_path):
        raise click.UsageError("Give exactly one of --type or --ideal")


def _fail(error: AlgebraError) -> None:
    """Print the error object on stdout and exit 2."""
    click.echo(json.dumps({'error': error.to_dict()}, indent=2))
    sys.exit(2)


def _gb_path(path: Path, prime: int, several: bool) -> Path:
    if not several:
        return path
    return path.with_name(f"{path.stem}-p{prime}{path.suffix}")


def source_options(func):
    """--type / --ideal selection shared by all commands."""
    func = click.option('--ideal', 'ideal_path', type=click.Path(exists=True, dir_okay=False),
                        default=None, help='Ideal file')(func)
    func = click.option('-t', '--type', 'ideal_type', default=None,
                        help='Built-in ideal: h4, a<n> or ci:<a1,...>')(func)
    return func


@click.group()
@click.option('-v', '--verbose', is_flag=True, help='Enable verbose output')
@click.option('-q', '--quiet', is_flag=True, help='Suppress non-error output')
@click.option('-j', '--json', 'json_output', is_flag=True, help='Output as JSON')
@click.version_option(version=__version__, prog_name='slpcheck')
@pass_context
def cli(ctx: Context, verbose: bool, quiet: bool, json_output: bool):
    """slpcheck - exact Lefschetz property checks for graded Artinian quotients.

    Builds a Groebner basis under grevlex and reads the strong or weak
    Lefschetz property of the last variable off the initial ideal.
    """
    ctx.verbose = verbose
    ctx.quiet = quiet
    ctx.json_output = json_output

    # Adjust logging level
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    elif quiet:
        logging.getLogger().setLevel(logging.ERROR)


@cli.command()
@source_options
@click.option('-p', '--prime', 'primes', type=int, multiple=True,
              help=f'Field characteristic, repeatable '
                   f'(default: {H4_DEFAULT_PRIME} for h4, {DEFAULT_PRIME} for other types)')
@click.option('-l', '--candidate', default=None, help='Linear form to test (default: last variable)')
@click.option('-w', '--weak', is_flag=True, help='Check the weak property only (s = 1)')
@click.option('--max-degree', type=int, default=None, help='Degree cap for Buchberger')
@click.option('--emit-gb', type=click.Path(dir_okay=False), default=None,
              help='Write the Groebner basis the checks ran on')
@click.option('--confirm', is_flag=True, help='Also run the brute-force rank oracle')
@pass_context
def check(ctx: Context, ideal_type: Optional[str], ideal_path: Optional[str], primes: tuple,
          candidate: Optional[str], weak: bool, max_degree: Optional[int],
          emit_gb: Optional[str], confirm: bool):
    """Check the strong (or weak) Lefschetz property.

    Prints one JSON report per prime on stdout; several primes are wrapped
    as {"runs": [...]}. Exit code 0 when every run passes, 1 when a run
    fails, 2 on input or algebra errors.
    """
    _require_source(ideal_type, ideal_path)
    run_primes: List[Optional[int]] = list(primes) or [None]

    documents: List[ReportDocument] = []
    try:
        for prime in run_primes:
            started = time.perf_counter()
            spec, input_hash = ctx.load_spec(ideal_type, ideal_path, prime, candidate)
            construction_seconds = time.perf_counter() - started
            logger.info(f"Checking {spec.name} over {spec.ring.field.describe()}")

            report = check_spec(spec, weak=weak, max_degree=max_degree)
            report.timings['construction'] = construction_seconds

            if confirm:
                started = time.perf_counter()
                report.oracle = brute_force_verdict(spec.generators, spec.ring, spec.candidate.form,
                                                    weak=weak)
                report.timings['oracle'] = time.perf_counter() - started
                if report.oracle != report.verdict:
                    logger.error(
                        f"Brute-force oracle disagrees: criterion {report.verdict}, "
                        f"oracle {report.oracle}"
                    )

            if emit_gb:
                path = _gb_path(Path(emit_gb), spec.ring.field.p, len(run_primes) > 1)
                exporter.write_gb_dump(report.basis, path)

            documents.append(exporter.build_document(report, spec.ring, input_hash, __version__))
        exporter.validate_documents(documents, ctx.get_store())
    except AlgebraError as e:
        _fail(e)

    click.echo(exporter.render_json(documents))
    if not ctx.quiet:
        for document in documents:
            click.echo(exporter.render_summary(document), err=True)

    sys.exit(exporter.exit_code(documents))


@cli.command()
@source_options
@click.option('-p', '--prime', type=int, default=None,
              help=f'Field characteristic (default: {H4_DEFAULT_PRIME} for h4, '
                   f'{DEFAULT_PRIME} for other types, else the file header)')
@click.option('--max-degree', type=int, default=None, help='Degree cap for Buchberger')
@click.option('-o', '--output', type=click.Path(dir_okay=False), default=None,
              help='Write the basis to a file instead of stdout')
@pass_context
def gb(ctx: Context, ideal_type: Optional[str], ideal_path: Optional[str], prime: Optional[int],
       max_degree: Optional[int], output: Optional[str]):
    """Print the reduced Groebner basis in ideal-file format."""
    _require_source(ideal_type, ideal_path)
    try:
        spec, _ = ctx.load_spec(ideal_type, ideal_path, prime)
        basis = buchberger(spec.generators, spec.ring, max_degree=max_degree)
    except AlgebraError as e:
        _fail(e)

    if not basis.complete:
        logger.warning(f"Degree cap {max_degree} was reached; the basis may be incomplete")
    if output:
        exporter.write_gb_dump(basis, Path(output))
        if not ctx.quiet:
            click.echo(f"Wrote {len(basis)} elements to {output}", err=True)
    else:
        click.echo(exporter.gb_dump_text(basis), nl=False)


@cli.command()
@source_options
@click.option('-p', '--prime', type=int, default=None,
              help=f'Field characteristic (default: {H4_DEFAULT_PRIME} for h4, '
                   f'{DEFAULT_PRIME} for other types, else the file header)')
@click.option('--max-degree', type=int, default=None, help='Degree cap for Buchberger')
@pass_context
def hilbert(ctx: Context, ideal_type: Optional[str], ideal_path: Optional[str],
            prime: Optional[int], max_degree: Optional[int]):
    """Print the Hilbert function of the quotient."""
    _require_source(ideal_type, ideal_path)
    try:
        spec, _ = ctx.load_spec(ideal_type, ideal_path, prime)
        analysis = analyze_quotient(spec.generators, spec.ring, max_degree=max_degree)
    except AlgebraError as e:
        _fail(e)

    if ctx.json_output:
        click.echo(json.dumps(exporter.hilbert_dict(analysis.hilbert), indent=2))
    else:
        click.echo(exporter.hilbert_text(analysis.hilbert))


if __name__ == '__main__':
    cli()
