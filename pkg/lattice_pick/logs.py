import logging

import click
from yachalk import chalk

from lattice_pick import flags


def configure_logging(verbose: bool = False) -> None:
    level = logging.DEBUG if verbose else getattr(logging, flags.LOG_LEVEL, logging.WARNING)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def log_status(message: str, success: bool = True) -> None:
    """Status line on stderr; stdout is kept for reports."""
    status = chalk.green("SUCCESS") if success else chalk.red("FAILURE")
    click.echo(f"{message} {status}", err=True)


def log_error(error: Exception) -> None:
    click.echo(f"{chalk.red(type(error).__name__)}: {error}", err=True)


def log_warning(message: str) -> None:
    click.echo(chalk.yellow(f"WARNING: {message}"), err=True)


def log_survey_status(normal, record) -> None:
    if record.all_equal:
        line = f"Survey of plane {normal}: common constant {record.common_value}"
    else:
        line = f"Survey of plane {normal}: constants differ across trials"
    log_status(line, success=record.all_equal)
