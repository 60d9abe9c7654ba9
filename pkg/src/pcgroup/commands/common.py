""" Shared input loading and rich/JSON output for the CLI commands. """
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Iterable, Optional

from rich.console import Console
from rich.markup import escape
from rich.table import Table

from pcgroup.parsing.parser import load_presentation_file
from pcgroup.pcp.presentation import PcPresentation
from pcgroup.pcp.serialization import load_pcp
from pcgroup.quotient.pquotient import p_quotient
from pcgroup.verify.report import Checklist

console = Console()

STATUS_STYLE = {"pass": "green", "fail": "bold red", "not-applicable": "yellow", "skipped": "cyan"}


def load_group(path: str | Path, max_class: Optional[int] = None) -> PcPresentation:
    """A PCP JSON document, or a presentation file run through the p-quotient."""
    path = Path(path)
    if path.suffix == ".json":
        return load_pcp(path)
    return p_quotient(load_presentation_file(path), max_class).pcp


def emit_json(data: Any) -> None:
    console.print_json(json.dumps(data))


def checklist_table(checklist: Checklist) -> Table:
    table = Table(title=checklist.title, title_justify="left")
    table.add_column("check")
    table.add_column("status")
    table.add_column("witness", overflow="fold")
    for item in checklist.items:
        style = STATUS_STYLE[item.status]
        table.add_row(escape(item.name), f"[{style}]{item.status}[/{style}]", escape(item.witness))
    return table


def print_checklists(checklists: Iterable[Checklist]) -> None:
    for checklist in checklists:
        console.print(checklist_table(checklist))


def orders_table(title: str, rows: Iterable[tuple]) -> Table:
    table = Table(title=title, title_justify="left")
    table.add_column("term")
    table.add_column("order", justify="right")
    for label, order in rows:
        table.add_row(str(label), str(order))
    return table
