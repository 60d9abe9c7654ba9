""" `pcgroup decompose`: central decomposition G = HU. """
from __future__ import annotations

from pathlib import Path
from typing import Optional

from pcgroup.commands.common import console, emit_json, load_group, print_checklists
from pcgroup.verify.decomposition import central_decomposition
from pcgroup.verify.report import SubgroupReport


def execute_decompose(path: Path, max_class: Optional[int], as_json: bool) -> bool:
    pcp = load_group(path, max_class)
    d = central_decomposition(pcp)
    if as_json:
        emit_json({
            "status": "pass" if d.checks.passed else "fail",
            "h_generators": [list(w) for w in d.h_generators],
            "u_generators": [list(w) for w in d.u_generators],
            "h": SubgroupReport.of(d.h).model_dump(),
            "u": SubgroupReport.of(d.u).model_dump(),
            "checks": d.checks.model_dump(),
        })
        return d.checks.passed

    console.print("H = <" + ", ".join(pcp.format_word(w) for w in d.h_generators) + f">, |H| = {d.h.order}")
    console.print("U = <" + ", ".join(pcp.format_word(w) for w in d.u_generators) + f">, |U| = {d.u.order}")
    print_checklists([d.checks])
    return d.checks.passed
