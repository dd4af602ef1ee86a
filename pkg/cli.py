# Author: Victor
# Page name: cli.py
# Page purpose: Command line for pi, modular function values, identity verification, the catalog and self-tests
# Date of creation: 2026-10-16
# Exit codes: 0 success, 1 a verification failed, 2 usage error.
import json
import logging
import os
import sys

import click
import pandas as pd
from mpmath import mpc, mpf
from pydantic import ValidationError

from catalog import catalog, catalog_ids, records_in_group
from config import load_settings
from errors import HeegnerError, UnknownIdentityError
from fastseries import compute_pi
from identities import verify_all, verify_id
from kernel import make_context
from modular import (
    HeegnerPoint,
    RegionId,
    TauPoint,
    dedekind_eta,
    discriminant_tau,
    eisenstein,
    klein_J,
    klein_j,
    s2,
    weber_f,
)
from pdf_report_generator import PDFReportGenerator
from periods import period_tilde, quasi_period_tilde, region_of
from report_io import export_reports, read_reports, write_reports
from report_summary import summary_stats, write_csv
from selftest import LEVELS, run_selftest
from utils import default_report_name, group_digits, parse_tau_spec, render_number, validate_digits

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

FUNCTIONS = ("E2", "E4", "E6", "eta", "weberf", "J", "j", "s2", "delta", "period", "quasiperiod")
REGIONS = {"inf": RegionId.C_INF, "one": RegionId.C_ONE, "zero": RegionId.C_ZERO}


def configure_logging(level, verbose=False):
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=click.get_text_stream("stderr"),
        force=True,
    )


def _digits(settings, digits):
    digits = settings.default_digits if digits is None else digits
    check = validate_digits(digits)
    if not check['valid']:
        raise click.BadParameter("; ".join(check['errors']), param_hint="--digits")
    return digits


def _tau(spec, ctx):
    parsed = parse_tau_spec(spec)
    if not parsed['valid']:
        raise click.BadParameter("; ".join(parsed['errors']), param_hint="--tau")
    if parsed['kind'] == "heegner":
        return HeegnerPoint(*parsed['values']).tau(ctx)
    with ctx.workprec():
        x, y = parsed['values']
        return TauPoint(mpc(mpf(x), mpf(y)))


def _evaluate(function, tau, region, ctx):
    if function in ("E2", "E4", "E6"):
        return eisenstein(int(function[1]), tau, ctx)
    if function == "eta":
        return dedekind_eta(tau, ctx)
    if function == "weberf":
        return weber_f(tau, ctx)
    if function == "J":
        return klein_J(tau, ctx)
    if function == "j":
        return klein_j(tau, ctx)
    if function == "s2":
        return s2(tau, ctx)
    if function == "delta":
        return discriminant_tau(tau, ctx)
    if function == "period":
        return period_tilde(region, tau, ctx)
    return quasi_period_tilde(region, tau, ctx)


@click.group()
@click.option("--verbose", is_flag=True, help="Log at DEBUG level to stderr.")
@click.pass_context
def cli(ctx, verbose):
    """High-precision pi and Chudnovsky-Ramanujan identity checks."""
    try:
        settings = load_settings()
    except ValidationError as exc:
        raise click.UsageError(f"Invalid environment settings: {exc}")
    configure_logging(settings.log_level, verbose)
    ctx.obj = settings


@cli.command()
@click.option("--digits", type=int, default=None, help="Decimal digits after the point.")
@click.option("--group", is_flag=True, help="Separate digits in blocks of 10.")
@click.pass_obj
def pi(settings, digits, group):
    """Print "3." followed by exactly DIGITS decimals (truncated)."""
    digits = _digits(settings, digits)
    text = compute_pi(digits + 1, workers=max(settings.threads, 1))
    click.echo(group_digits(text) if group else text)


@cli.command(name="eval")
@click.option("--function", "function", type=click.Choice(FUNCTIONS), required=True)
@click.option("--tau", "tau_spec", required=True, help="heegner:a,b,c or complex:x,y")
@click.option("--region", type=click.Choice(sorted(REGIONS)), default=None,
              help="Representation used by period and quasiperiod.")
@click.option("--digits", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.pass_obj
def eval_command(settings, function, tau_spec, region, digits, as_json):
    """Evaluate a modular or period function at tau."""
    digits = _digits(settings, digits)
    ctx = make_context(digits, guard_bits=settings.guard_bits)
    try:
        tau = _tau(tau_spec, ctx)
        chosen = REGIONS[region] if region else None
        if function in ("period", "quasiperiod") and chosen is None:
            chosen = region_of(tau, ctx)
        value = _evaluate(function, tau, chosen, ctx)
    except HeegnerError as exc:
        raise click.UsageError(f"{type(exc).__name__}: {exc}")
    text = render_number(value, digits, ctx.cut_tolerance)
    if as_json:
        payload = {"function": function, "tau": tau_spec, "digits": digits, "value": text}
        if chosen is not None:
            payload["region"] = chosen.value
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(text)


def _echo_reports(reports):
    for report in reports:
        verdict = "PASS" if report.passed else "FAIL"
        click.echo(f"{report.id}: {verdict} rel_diff={report.rel_diff}")
        for note in report.notes:
            click.echo(f"    note: {note}")


def _write_outputs(reports, digits, output, pdf, csv_path):
    if output:
        write_reports(output, reports, digits)
    if pdf:
        PDFReportGenerator().write(pdf, reports)
    if csv_path:
        write_csv(csv_path, reports)


def _exit_on_failures(click_ctx, reports):
    failed = [report.id for report in reports if not report.passed]
    if failed:
        logger.warning("%d of %d identities failed: %s", len(failed), len(reports), ", ".join(failed))
        click_ctx.exit(EXIT_FAILED)


@cli.command()
@click.option("--id", "identity_id", default=None, help="Identity id, e.g. series.sqrt-2.")
@click.option("--all", "verify_every", is_flag=True, help="Verify the whole catalog.")
@click.option("--group", default=None, help="Id prefix, e.g. series or table.s2.")
@click.option("--digits", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None, help="Write the JSON export here.")
@click.option("--output-dir", type=click.Path(file_okay=False), default=None,
              help="Write the JSON export into this directory under a timestamped name.")
@click.option("--pdf", type=click.Path(dir_okay=False), default=None, help="Write a PDF summary here.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Write a CSV table here.")
@click.option("--progress", is_flag=True, help="Show a progress bar on stderr.")
@click.pass_context
def verify(click_ctx, identity_id, verify_every, group, digits, as_json, output, output_dir, pdf, csv_path,
           progress):
    """Verify one identity, a group of identities or the whole catalog."""
    settings = click_ctx.obj
    if sum(bool(choice) for choice in (identity_id, verify_every, group)) != 1:
        raise click.UsageError("Give exactly one of --id, --all or --group")
    if output and output_dir:
        raise click.UsageError("Give at most one of --output and --output-dir")
    digits = _digits(settings, digits)
    ctx = make_context(digits, guard_bits=settings.guard_bits)
    try:
        if identity_id:
            reports = [verify_id(identity_id, ctx)]
        else:
            records = catalog() if verify_every else records_in_group(group)
            if not records:
                raise click.BadParameter(f"no identities in group {group!r}", param_hint="--group")
            reports = verify_all(ctx, threads=settings.threads, records=records, progress=progress)
    except UnknownIdentityError as exc:
        click.echo(f"Unknown identity id: {exc.identity_id}", err=True)
        click.echo("Valid ids:", err=True)
        for valid in exc.valid_ids:
            click.echo(f"  {valid}", err=True)
        click_ctx.exit(EXIT_USAGE)
    except HeegnerError as exc:
        raise click.UsageError(f"{type(exc).__name__}: {exc}")

    if as_json:
        click.echo(export_reports(reports, digits))
    else:
        _echo_reports(reports)
    if output_dir:
        os.makedirs(output_dir, exist_ok=True)
        output = os.path.join(output_dir, default_report_name("verify", "json"))
        click.echo(f"Wrote {output}", err=True)
    _write_outputs(reports, digits, output, pdf, csv_path)
    _exit_on_failures(click_ctx, reports)


@cli.command()
@click.argument("source", type=click.Path(exists=True, dir_okay=False))
@click.option("--pdf", type=click.Path(dir_okay=False), default=None, help="Write a PDF summary here.")
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False), default=None, help="Write a CSV table here.")
@click.pass_context
def report(click_ctx, source, pdf, csv_path):
    """Summarize a JSON export written by verify."""
    try:
        reports = read_reports(source)
    except ValueError as exc:
        raise click.BadParameter(str(exc), param_hint="SOURCE")
    _echo_reports(reports)
    stats = summary_stats(reports)
    worst = "n/a" if stats["worst_agreement"] is None else f"{stats['worst_agreement']} digits"
    click.echo(f"{stats['passed']}/{stats['total']} passed, worst agreement {worst}")
    _write_outputs(reports, None, None, pdf, csv_path)
    _exit_on_failures(click_ctx, reports)


def _catalog_rows():
    rows = []
    for rec in catalog():
        h = rec.heegner
        rows.append({
            "id": rec.id,
            "kind": rec.kind.value,
            "group": rec.group,
            "tau": f"{h.a},{h.b},{h.c}" if h is not None else "",
            "lhs": str(rec.lhs) if rec.lhs is not None else "",
            "quantity": rec.quantity or "",
            "value": str(rec.value) if rec.value is not None else "",
            "notes": list(rec.notes),
        })
    return rows


@cli.command(name="catalog")
@click.option("--format", "fmt", type=click.Choice(["json", "text", "csv"]), default="text")
def catalog_command(fmt):
    """List the identity catalog."""
    rows = _catalog_rows()
    if fmt == "json":
        click.echo(json.dumps(rows, indent=2))
    elif fmt == "csv":
        frame = pd.DataFrame(rows)
        frame["notes"] = frame["notes"].apply("; ".join)
        click.echo(frame.to_csv(index=False), nl=False)
    else:
        for row in rows:
            detail = row["lhs"] or f"{row['quantity']} = {row['value']}"
            click.echo(f"{row['id']:<24} {row['kind']:<15} {detail}")
        click.echo(f"{len(catalog_ids())} identities")


@cli.command()
@click.option("--level", type=click.Choice(LEVELS), default="quick")
@click.pass_context
def selftest(click_ctx, level):
    """Run the quick or full self-test suites."""
    results = run_selftest(level, threads=click_ctx.obj.threads)
    for result in results:
        verdict = "PASS" if result.passed else "FAIL"
        click.echo(f"{result.name:<22} {verdict} {result.seconds:8.1f}s  {result.detail}")
    failed = [result.name for result in results if not result.passed]
    click.echo(f"{len(results) - len(failed)}/{len(results)} suites passed")
    if failed:
        click_ctx.exit(EXIT_FAILED)


def run(argv=None):
    """Run the command line and return its exit code."""
    try:
        code = cli.main(args=argv, prog_name="heegner-pi", standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAILED
    return code if isinstance(code, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(run())
