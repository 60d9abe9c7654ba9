""" `pcgroup corpus-verify`: the acceptance suite over a corpus directory. """
from __future__ import annotations

from pathlib import Path
from typing import Optional

from rich.markup import escape
from rich.table import Table

from pcgroup.commands.common import console, emit_json, print_checklists
from pcgroup.corpus.acceptance import corpus_verify


def execute_corpus_verify(directory: Optional[Path], long: bool, seed: Optional[int], fuzz: bool, as_json: bool) -> bool:
    report = corpus_verify(directory, long=long, seed=seed, fuzz=fuzz)
    if as_json:
        data = report.model_dump()
        data["status"] = "pass" if report.passed else "fail"
        emit_json(data)
        return report.passed

    summary = Table(title="corpus", title_justify="left")
    for column in ("group", "order", "result"):
        summary.add_column(column)
    for entry in report.entries:
        result = "[green]pass[/green]" if entry.passed else f"[bold red]{escape(entry.error or 'FAIL')}[/bold red]"
        summary.add_row(entry.name, str(entry.order or "-"), result)
    for entry in report.entries:
        console.rule(entry.name)
        print_checklists(entry.checklists)
        for comparison in entry.comparisons:
            console.print(f"{comparison.left} vs {comparison.right}: {comparison.verdict}")
    if report.fuzz is not None:
        console.rule("fuzz")
        console.print(f"seed {report.fuzz.seed}: {report.fuzz.accepted} presentations inside the hypotheses, "
                      f"{len(report.fuzz.failures)} failures, {len(report.fuzz.quotient_errors)} quotient errors")
        for case in report.fuzz.failures:
            console.print(f"[bold red]{case.label}[/bold red] {escape(case.presentation)}: {escape(case.error)}")
        for case in report.fuzz.quotient_errors:
            console.print(f"[yellow]{case.label}[/yellow] {escape(case.presentation)}: {escape(case.error)}")
    console.print(summary)
    return report.passed
