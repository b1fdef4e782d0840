#!/usr/bin/env python3
"""
Induced 3-Lie CLI
Command-line front end over the algebra, induction, structure, cohomology and catalog modules
"""

import functools
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional, Tuple

if __package__ in (None, ""):
    sys.path.append(os.path.join(os.path.dirname(__file__), '..'))

import click
from dotenv import load_dotenv

from src.algebra import StructureConstants, verify_identity
from src.catalog import (
    catalog_get,
    catalog_list,
    get_catalog,
    induced_classification,
    parse_params,
    recognize_induced,
    table6,
    table7,
)
from src.cohomology import ADJOINT, COEFFICIENTS, SKEW_FULL, SKEW_PAIR, THEORIES, TRILIE, cohomology_report
from src.document import parse_cochain_document, parse_document, print_document
from src.errors import AlgebraError, ArityError, DimensionMismatchError
from src.exactlin import parse_rational
from src.extensions import central_extend, induce_extension, is_trivial_extension
from src.induce import LinearForm, induce_bracket, trace_space
from src.logging_setup import setup_logging
from src.report import ReportWriter
from src.settings import Settings, load_settings
from src.structure import center, central_series, compare_series, derived_series

load_dotenv()

logger = logging.getLogger(__name__)


@dataclass
class CommandContext:
    settings: Settings
    writer: ReportWriter


def handle_errors(command):
    """Map engine errors to exit codes: 1 for mathematical failures, 2 for usage and parse problems"""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except AlgebraError as e:
            logger.error(f"{type(e).__name__}: {e}")
            click.echo(f"✗ Error: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper


def load_algebra(source: str, params: Optional[str]) -> Tuple[StructureConstants, Optional[LinearForm]]:
    """Document path or catalog id"""
    if os.path.isfile(source):
        with open(source, encoding="utf-8") as f:
            parsed = parse_document(f.read())
        return parsed.algebra, parsed.trace
    return catalog_get(source, parse_params(params)), None


def parse_trace(text: Optional[str], dim: int, fallback: Optional[LinearForm] = None) -> Optional[LinearForm]:
    if text is None:
        return fallback
    try:
        tau = LinearForm(tuple(parse_rational(part) for part in text.split(",")))
    except AlgebraError as e:
        raise click.BadParameter(str(e), param_hint="--trace")
    if tau.dim != dim:
        raise click.BadParameter(f"{tau.dim} coefficients for an algebra of dimension {dim}", param_hint="--trace")
    return tau


def require_trace(tau: Optional[LinearForm]) -> LinearForm:
    if tau is None:
        raise click.UsageError("a trace is required: pass --trace \"t1,...,td\" or put one in the document")
    return tau


params_option = click.option("--params", default=None, help='Catalog parameter bindings, e.g. "a=1,b=-1/2"')
trace_option = click.option("--trace", "trace_text", default=None, help='Trace coefficients "t1,...,td"')


@click.group()
@click.option("--format", "output_format", type=click.Choice(["human", "machine"]), default=None,
              help="Report format (default from settings)")
@click.option("--config", "config_path", type=click.Path(dir_okay=False), default=None, help="Path to config.yaml")
@click.pass_context
def cli(ctx, output_format, config_path):
    """Exact computations on Lie algebras and the 3-Lie algebras they induce."""
    try:
        settings = load_settings(config_path)
    except AlgebraError as e:
        click.echo(f"✗ Error: {e}", err=True)
        sys.exit(e.exit_code)
    setup_logging(settings)
    ctx.obj = CommandContext(settings, ReportWriter(settings, output_format))


@cli.command()
@click.argument("algebra")
@params_option
@click.pass_obj
@handle_errors
def verify(obj: CommandContext, algebra, params):
    """Check the Jacobi / Filippov identity."""
    a, _ = load_algebra(algebra, params)
    report = verify_identity(a)
    click.echo(obj.writer.render_verify(a, report))
    if not report.ok:
        sys.exit(1)


@cli.command()
@click.argument("algebra")
@params_option
@click.pass_obj
@handle_errors
def traces(obj: CommandContext, algebra, params):
    """Basis of the trace space."""
    a, _ = load_algebra(algebra, params)
    click.echo(obj.writer.render_traces(trace_space(a)))


@cli.command()
@click.argument("algebra")
@params_option
@trace_option
@click.pass_obj
@handle_errors
def induce(obj: CommandContext, algebra, params, trace_text):
    """Induced bracket of arity n+1."""
    a, doc_trace = load_algebra(algebra, params)
    tau = require_trace(parse_trace(trace_text, a.dim, doc_trace))
    click.echo(obj.writer.render_induced(a, tau, induce_bracket(a, tau)))


@cli.command()
@click.argument("algebra")
@params_option
@trace_option
@click.pass_obj
@handle_errors
def series(obj: CommandContext, algebra, params, trace_text):
    """Derived and central series; with a trace, compare with the induced algebra."""
    a, doc_trace = load_algebra(algebra, params)
    click.echo(obj.writer.render_series(a, derived_series(a), central_series(a)))
    tau = parse_trace(trace_text, a.dim, doc_trace)
    if tau is not None:
        if a.arity != 2:
            raise ArityError("series comparison starts from a Lie algebra")
        induced = induce_bracket(a, tau)
        click.echo("")
        click.echo(obj.writer.render_series(induced, derived_series(induced), central_series(induced)))
        click.echo("")
        click.echo(obj.writer.render_comparison(compare_series(a, tau)))


@cli.command(name="center")
@click.argument("algebra")
@params_option
@click.pass_obj
@handle_errors
def center_command(obj: CommandContext, algebra, params):
    """Center of the algebra."""
    a, _ = load_algebra(algebra, params)
    click.echo(obj.writer.render_center(a, center(a)))


@cli.command()
@click.argument("algebra")
@params_option
@trace_option
@click.option("--theory", type=click.Choice(THEORIES), required=True)
@click.option("--coeffs", type=click.Choice(COEFFICIENTS), default=ADJOINT, show_default=True)
@click.option("--degree", type=click.IntRange(1, 2), default=1, show_default=True)
@click.option("--skew", type=click.Choice([SKEW_PAIR, SKEW_FULL]), default=SKEW_PAIR, show_default=True,
              help="Cochain space for trilie degree 2")
@click.pass_obj
@handle_errors
def cohomology(obj: CommandContext, algebra, params, trace_text, theory, coeffs, degree, skew):
    """Cocycles, coboundaries and cohomology dimension; a Lie algebra with a trace is induced first for trilie."""
    a, doc_trace = load_algebra(algebra, params)
    if theory == TRILIE and a.arity == 2:
        a = induce_bracket(a, require_trace(parse_trace(trace_text, a.dim, doc_trace)))
    click.echo(obj.writer.render_cohomology(a, cohomology_report(a, theory, coeffs, degree, skew)))


@cli.command()
@click.argument("algebra")
@params_option
@trace_option
@click.option("--cocycle", "cocycle_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="Scalar 2-cocycle document")
@click.pass_obj
@handle_errors
def extend(obj: CommandContext, algebra, params, trace_text, cocycle_path):
    """Central extension; with a trace, also the induced extension."""
    a, doc_trace = load_algebra(algebra, params)
    with open(cocycle_path, encoding="utf-8") as f:
        omega = parse_cochain_document(f.read())
    if omega.dim != a.dim:
        raise DimensionMismatchError(f"cocycle on {omega.dim} coordinates for an algebra of dimension {a.dim}")
    extension = central_extend(a, omega)
    click.echo(obj.writer.render_extension(extension, trivial=is_trivial_extension(a, omega)))
    tau = parse_trace(trace_text, a.dim, doc_trace)
    if tau is not None and a.arity == 2:
        induced = induce_extension(a, tau, omega)
        trivial = is_trivial_extension(induce_bracket(a, tau), induced.omega_tau)
        click.echo("")
        click.echo(obj.writer.render_extension(induced.ext3, induced.omega_tau, trivial))


@cli.command()
@click.argument("algebra", required=False)
@params_option
@click.option("--max-dim", type=click.IntRange(2, 5), default=5, show_default=True,
              help="Dimension bound when classifying the catalog")
@click.pass_obj
@handle_errors
def recognize(obj: CommandContext, algebra, params, max_dim):
    """Recognise an induced 3-Lie algebra; without ALGEBRA, classify the 3-Lie catalog."""
    if algebra is None:
        rows = induced_classification(max_dim)
        click.echo(obj.writer.render_classification(rows))
        if not all(r.matches for r in rows):
            sys.exit(1)
        return
    t, _ = load_algebra(algebra, params)
    click.echo(obj.writer.render_recognition(t, recognize_induced(t)))


@cli.command()
@click.argument("entry_id", required=False)
@params_option
@click.option("--arity", type=click.IntRange(2, 3), default=None)
@click.option("--dim", type=int, default=None)
@click.pass_obj
@handle_errors
def catalog(obj: CommandContext, entry_id, params, arity, dim):
    """List catalog entries or print one as a document."""
    if entry_id is None:
        click.echo(obj.writer.render_catalog(catalog_list(arity, dim)))
        return
    a = catalog_get(entry_id, parse_params(params))
    click.echo(print_document(a), nl=False)


@cli.command(name="table6")
@click.argument("lie_id", required=False)
@params_option
@click.pass_obj
@handle_errors
def table6_command(obj: CommandContext, lie_id, params):
    """Trace spaces and induced brackets of catalog Lie algebras."""
    if lie_id is not None:
        click.echo(obj.writer.render_table6_row(table6(lie_id, parse_params(params))))
        return
    rows = [table6(e.id) for e in get_catalog().list(arity=2)]
    click.echo(obj.writer.render_table6(rows))


@cli.command(name="table7")
@click.argument("lie_id", required=False)
@click.pass_obj
@handle_errors
def table7_command(obj: CommandContext, lie_id):
    """First adjoint cohomology of gl2, M4, M5, M8 and of their induced algebras."""
    click.echo(obj.writer.render_table7(table7(lie_id)))
    logger.info("✓ cohomology table complete")


def main():
    cli(prog_name="induced3lie")


if __name__ == "__main__":
    main()
