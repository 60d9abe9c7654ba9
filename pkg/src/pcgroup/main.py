""" main CLI commands and entry point. """

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Callable, Optional

import typer
from rich.markup import escape

from pcgroup.commands.check import execute_check
from pcgroup.commands.common import console
from pcgroup.commands.corpus_verify import execute_corpus_verify
from pcgroup.commands.decompose import execute_decompose
from pcgroup.commands.quotient import execute_quotient
from pcgroup.commands.series import execute_series
from pcgroup.configuration.config_loader import load_config
from pcgroup.configuration.logging_loader import configure_logging
from pcgroup.errors import PcGroupError
from pcgroup.verify.suite import check_names

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_ERROR = 2

app = typer.Typer(help="Finite p-groups: p-quotients, series, structure checks and central decompositions")

ClassOption = typer.Option(None, "--class", "-c", min=1, help="Class bound for presentation-file input.")
JsonOption = typer.Option(False, "--json/--text", help="Machine-readable JSON instead of tables.")


def _run(action: Callable[[], bool], as_json: bool) -> None:
    """Maps the command result to the exit code; errors become a failure report."""
    try:
        ok = action()
    except PcGroupError as e:
        logger.error("%s: %s", type(e).__name__, e)
        if as_json:
            console.print_json(json.dumps({"status": "error", "error": type(e).__name__, "message": str(e)}))
        else:
            console.print(f"[bold red]{type(e).__name__}[/bold red]: {escape(str(e))}")
        raise typer.Exit(EXIT_ERROR)
    raise typer.Exit(EXIT_OK if ok else EXIT_CHECK_FAILED)


@app.callback()
def setup(verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging.")):
    """Configures logging before any command runs."""
    configure_logging("DEBUG" if verbose else load_config().logging.level)


@app.command("quotient")
def cmd_quotient(
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="Presentation file."),
    max_class: Optional[int] = ClassOption,
    out: Optional[Path] = typer.Option(None, "--out", "-o", help="Write the PCP JSON here."),
    as_json: bool = JsonOption,
):
    """p-quotient of a presentation file up to the class bound."""
    _run(lambda: execute_quotient(path, max_class, out, as_json), as_json)


@app.command("series")
def cmd_series(
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="PCP JSON or presentation file."),
    max_class: Optional[int] = ClassOption,
    as_json: bool = JsonOption,
):
    """Lower central, derived and exponent-p central series."""
    _run(lambda: execute_series(path, max_class, as_json), as_json)


@app.command("check")
def cmd_check(
    name: str = typer.Argument(..., help=f"One of: {', '.join(check_names())}."),
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="PCP JSON or presentation file."),
    max_class: Optional[int] = ClassOption,
    as_json: bool = JsonOption,
):
    """Runs a named group of theorem checks; exit 0 iff all pass."""
    _run(lambda: execute_check(name, path, max_class, as_json), as_json)


@app.command("decompose")
def cmd_decompose(
    path: Path = typer.Argument(..., exists=True, dir_okay=False, help="PCP JSON or presentation file."),
    max_class: Optional[int] = ClassOption,
    as_json: bool = JsonOption,
):
    """Central decomposition G = HU with H at most 5-generated."""
    _run(lambda: execute_decompose(path, max_class, as_json), as_json)


@app.command("corpus-verify")
def cmd_corpus_verify(
    directory: Optional[Path] = typer.Argument(None, exists=True, file_okay=False, help="Directory of .grp files; default the bundled corpus."),
    long: bool = typer.Option(False, "--long", help="Also search every 4-dimensional subspace for H."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed for sampled identities and the fuzz run."),
    fuzz: bool = typer.Option(True, "--fuzz/--no-fuzz", help="Run the randomised presentations."),
    as_json: bool = JsonOption,
):
    """Full acceptance suite over the corpus."""
    _run(lambda: execute_corpus_verify(directory, long, seed, fuzz, as_json), as_json)


def main():
    """ Entry point for the pcgroup script. """
    app()


if __name__ == "__main__":
    main()
