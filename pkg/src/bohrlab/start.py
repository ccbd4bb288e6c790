# SPDX-License-Identifier: BSD-2-Clause
# Copyright  (c) 2024, the 'bohrlab' Developers. All rights reserved.
import sys

import click
import jsonschema

from . import run
from .exceptions import (
    CertificationError,
    ConfigurationError,
    DomainError,
    NumericError,
    RootNotFoundError,
)
from .settings import ALL_SUITES, get_logger

logger = get_logger(__file__)

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3


def execute(action):
    """
    Run a command body, mapping library errors onto exit codes.
    Nothing is printed to stdout when an error is raised.
    """
    try:
        return action()
    except (DomainError, ConfigurationError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except (NumericError, RootNotFoundError, CertificationError, jsonschema.ValidationError) as e:
        logger.error(f"{type(e).__name__}: {e}")
        click.echo(f"Numeric failure: {e}", err=True)
        sys.exit(EXIT_NUMERIC)


def finish(record, out):
    if out is not None:
        record.write(out)


@click.group()
def click_wrapper():
    pass


@click_wrapper.command(short_help="Compute one of the Bohr-type radii.")
@click.option('--kind', type=click.Choice(run.RADIUS_KINDS), required=True)
@click.option('--p', type=click.IntRange(min=1), help="Symmetry order for --kind theorem1.")
@click.option('--alpha', type=click.FloatRange(0, 1, min_open=True), help="Parameter for --kind corollary5.")
@click.option('--tol', type=click.FloatRange(0, min_open=True), help="Root or bisection tolerance; not accepted by the closed-form kinds rstar and corollary5.")
@click.option('--out', type=click.Path(dir_okay=False), help="Write the JSON record to this file.")
def radius(kind, p, alpha, tol, out):
    if kind == 'theorem1' and p is None:
        raise click.UsageError("--p is required for --kind theorem1")
    if kind == 'corollary5' and alpha is None:
        raise click.UsageError("--alpha is required for --kind corollary5")
    record = execute(lambda: run.radius(kind, p=p, alpha=alpha, tol=tol))
    execute(lambda: finish(record, out))
    result = record.results[0]
    click.echo(f"{result['label']}: r = {result['radius']:.12g}")
    click.echo(f"residual: {result['residual']:.3e}")
    click.echo(f"provenance: {result['provenance']}")
    if result['extremal_a'] is not None:
        click.echo(f"extremal a: {result['extremal_a']:.12g}")


@click_wrapper.command(short_help="Tabulate r_p for p = 1..p_max.")
@click.option('--p-max', 'p_max', type=click.IntRange(min=1), required=True)
@click.option('--format', 'output_format', type=click.Choice(['csv', 'json']), default='csv', show_default=True)
@click.option('--tol', type=click.FloatRange(0, min_open=True), help="Root tolerance.")
@click.option('--out', type=click.Path(dir_okay=False), help="Write the JSON record to this file.")
def table(p_max, output_format, tol, out):
    record = execute(lambda: run.table(p_max, tol=tol))
    execute(lambda: finish(record, out))
    if output_format == 'csv':
        click.echo(record.to_csv(run.TABLE_COLUMNS), nl=False)
    else:
        click.echo(record.to_json())


@click_wrapper.command(short_help="Run verification suites; exit 1 on any failure.")
@click.option('--suite', type=click.Choice([*ALL_SUITES, 'all']), required=True)
@click.option('--p', type=click.IntRange(min=1), help="Symmetry order for theorem1 and lemma2.")
@click.option('--p-max', 'p_max', type=click.IntRange(min=1), default=32, show_default=True, help="Largest p for lemma1.")
@click.option('--trials', type=click.IntRange(min=1), help="Trials per suite.")
@click.option('--seed', type=click.IntRange(0, 2 ** 64 - 1), help="Overridden by BOHRLAB_SEED when set.")
@click.option('--out', type=click.Path(dir_okay=False), help="Write the full JSON report to this file.")
def verify(suite, p, p_max, trials, seed, out):
    record = execute(lambda: run.verify(suite, p=p, trials=trials, seed=seed, p_max=p_max))
    execute(lambda: finish(record, out))
    failed = False
    for report in record.results:
        worst = 'n/a' if report['worst_margin'] is None else f"{report['worst_margin']:.6e}"
        click.echo(
            f"{report['name']}: {'PASS' if report['passed'] else 'FAIL'} trials={report['trials']} "
            f"failures={report['failures']} skipped={report['skipped']} worst_margin={worst}"
        )
        failed = failed or not report['passed']
    click.echo(f"seed: {record.arguments['seed']}")
    if failed:
        click.echo("Verification failures indicate an implementation bug, not a counterexample.", err=True)
        sys.exit(EXIT_FAILURES)


@click_wrapper.command(short_help="Emit certified majorant values as CSV.")
@click.option('--function', 'function', type=click.Choice(run.MAJORANT_FUNCTIONS), required=True)
@click.option('--p', type=click.IntRange(min=1), help="Symmetry order of the extremal function.")
@click.option('--a', type=float, help="Parameter of the extremal or Mobius function.")
@click.option('--r-from', 'r_from', type=click.FloatRange(0, 1, max_open=True), required=True)
@click.option('--r-to', 'r_to', type=click.FloatRange(0, 1, max_open=True), required=True)
@click.option('--steps', type=click.IntRange(min=2), default=101, show_default=True)
@click.option('--truncation', type=click.IntRange(min=1), help="Series truncation order N.")
@click.option('--out', type=click.Path(dir_okay=False), help="Write the JSON record to this file.")
def majorant(function, p, a, r_from, r_to, steps, truncation, out):
    if not r_from < r_to:
        raise click.UsageError("--r-from must be below --r-to")
    if function == 'mobius' and a is None:
        raise click.UsageError("--a is required for --function mobius")
    record = execute(lambda: run.majorant_sweep(function, r_from, r_to, steps, p=p, a=a, truncation=truncation))
    execute(lambda: finish(record, out))
    click.echo(record.to_csv(run.MAJORANT_COLUMNS), nl=False)
