""" `pcgroup check`: named theorem checks on one group. """
from __future__ import annotations

from pathlib import Path
from typing import Optional

from pcgroup.commands.common import emit_json, load_group, print_checklists
from pcgroup.verify.suite import run_checks


def execute_check(name: str, path: Path, max_class: Optional[int], as_json: bool) -> bool:
    pcp = load_group(path, max_class)
    checklists = run_checks(pcp, name)
    passed = all(c.passed for c in checklists)
    if as_json:
        emit_json({
            "status": "pass" if passed else "fail",
            "checklists": [c.model_dump() for c in checklists],
        })
    else:
        print_checklists(checklists)
    return passed
