#!/usr/bin/python
import logging
import sys
from typing import List, Optional

import click

from hochschild.enums.check_name import CheckName
from hochschild.enums.output_format import OutputFormat
from hochschild.errors import ParseError, ValidationError
from hochschild.jobs.demos import demo_names, demo_spec
from hochschild.jobs.job_spec import JobSpec, parse_checks, parse_spec
from hochschild.jobs.report_formatter import format_report
from run.job_runner import run_job

LOGGER = logging.getLogger(__name__)

USAGE_ERROR = 2
COMPUTE_CHECKS = [CheckName.BG, CheckName.RING]


def _split_checks(text: Optional[str]) -> Optional[List[CheckName]]:
    if text is None:
        return None
    return parse_checks([name.strip() for name in text.split(",") if name.strip()])


def _fail_usage(error: Exception) -> None:
    click.echo("error: %s" % error, err=True)
    sys.exit(USAGE_ERROR)


def _run(spec: JobSpec, output_format: str, max_degree: Optional[int], checks: Optional[str],
         default_checks: Optional[List[CheckName]] = None) -> None:
    try:
        requested = _split_checks(checks)
        if requested is None:
            requested = default_checks
        spec = spec.with_overrides(max_degree, requested)
    except ValidationError as error:
        _fail_usage(error)
    output = OutputFormat(output_format)
    report = run_job(spec)
    click.echo(format_report(report, output, color=sys.stdout.isatty()))
    sys.exit(report.exit_code)


def _load(spec_file) -> JobSpec:
    try:
        return parse_spec(spec_file.read())
    except (ParseError, ValidationError) as error:
        _fail_usage(error)


format_option = click.option("--format", "output_format", type=click.Choice([f.value for f in OutputFormat]),
                             default=OutputFormat.TABLE.value, show_default=True)
max_degree_option = click.option("--max-degree", type=int, default=None, help="Override the spec's max_degree.")
checks_option = click.option("--checks", default=None, help="Comma separated check names, e.g. bg,ring.")


@click.group()
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
def cli(verbose: bool):
    """Hochschild cohomology of rank one Hopf algebras over prime fields."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(asctime)s %(levelname)s %(name)s: %(message)s")


@cli.command()
@click.argument("spec_file", type=click.File("r"))
@format_option
@max_degree_option
@checks_option
def compute(spec_file, output_format, max_degree, checks):
    """Dimensions and ring presentation for the algebra in SPEC_FILE."""
    _run(_load(spec_file), output_format, max_degree, checks, COMPUTE_CHECKS)


@cli.command()
@click.argument("spec_file", type=click.File("r"))
@format_option
@max_degree_option
@checks_option
def verify(spec_file, output_format, max_degree, checks):
    """Run every cross-check the spec in SPEC_FILE asks for."""
    _run(_load(spec_file), output_format, max_degree, checks)


@cli.command()
@click.argument("name")
@format_option
@max_degree_option
@checks_option
def demo(name, output_format, max_degree, checks):
    """Run one of the built-in examples."""
    try:
        spec = demo_spec(name)
    except KeyError:
        _fail_usage("unknown demo '%s', choose from %s" % (name, ", ".join(demo_names())))
    except ValidationError as error:
        _fail_usage(error)
    _run(spec, output_format, max_degree, checks)


@cli.command()
def demos():
    """List the built-in examples."""
    for name in demo_names():
        spec = demo_spec(name)
        click.echo("%s  p = %d, n = %d, group %s" % (name, spec.prime, spec.n, spec.group))


if __name__ == '__main__':
    cli()
