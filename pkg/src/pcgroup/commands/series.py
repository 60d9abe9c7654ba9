""" `pcgroup series`: central and derived series of a group. """
from __future__ import annotations

from pathlib import Path
from typing import Optional

from pcgroup.commands.common import console, emit_json, load_group, orders_table
from pcgroup.subgroups.centralizer import center
from pcgroup.subgroups.series import derived_series, exponent_p_central_series, frattini_rank, lower_central_series


def execute_series(path: Path, max_class: Optional[int], as_json: bool) -> bool:
    pcp = load_group(path, max_class)
    lcs = [t.order for t in lower_central_series(pcp)]
    derived = [t.order for t in derived_series(pcp)]
    pcs = [t.order for t in exponent_p_central_series(pcp)]
    summary = {
        "order": pcp.order,
        "lower_central": lcs,
        "derived": derived,
        "exponent_p_central": pcs,
        "nilpotency_class": len(lcs) - 1,
        "exponent_p_class": len(pcs) - 1,
        "center_order": center(pcp).order,
        "frattini_rank": frattini_rank(pcp),
    }
    if as_json:
        emit_json({"status": "ok", **summary})
        return True

    console.print(orders_table("lower central series", ((f"gamma_{i}", o) for i, o in enumerate(lcs, start=1))))
    console.print(orders_table("derived series", ((f"G^({i})", o) for i, o in enumerate(derived))))
    console.print(orders_table("exponent-p central series", ((f"P_{i}", o) for i, o in enumerate(pcs, start=1))))
    console.print(f"class {summary['nilpotency_class']}, exponent-p class {summary['exponent_p_class']}, "
                  f"|Z(G)| = {summary['center_order']}, d(G) = {summary['frattini_rank']}")
    return True
