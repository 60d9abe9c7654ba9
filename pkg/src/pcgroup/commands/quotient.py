""" `pcgroup quotient`: p-quotient of a presentation file. """
from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional

from rich.table import Table

from pcgroup.commands.common import console, emit_json
from pcgroup.parsing.parser import load_presentation_file
from pcgroup.pcp.serialization import save_pcp, to_document
from pcgroup.quotient.pquotient import p_quotient

logger = logging.getLogger(__name__)


def execute_quotient(path: Path, max_class: Optional[int], out: Optional[Path], as_json: bool) -> bool:
    fp = load_presentation_file(path)
    result = p_quotient(fp, max_class)
    pcp = result.pcp
    if out is not None:
        save_pcp(pcp, out)
        logger.info("wrote %s", out)

    images = {name: pcp.format_word(w) for name, w in result.images.items()}
    if as_json:
        emit_json({
            "status": "ok",
            "name": fp.name,
            "order": pcp.order,
            "achieved_class": result.achieved_class,
            "stabilized": result.stabilized,
            "history": list(result.history),
            "images": {name: list(w) for name, w in result.images.items()},
            "pcp": to_document(pcp).model_dump(),
        })
        return True

    console.print(f"[bold]{fp.name or path.name}[/bold]: |G| = {pcp.p}^{pcp.n}, "
                  f"class {result.achieved_class}, {'stabilized' if result.stabilized else 'class bound reached'}")
    table = Table(title="generator images", title_justify="left")
    table.add_column("generator")
    table.add_column("image")
    for name, word in images.items():
        table.add_row(name, word)
    console.print(table)
    return True
