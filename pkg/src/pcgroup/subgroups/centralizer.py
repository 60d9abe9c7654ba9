"""
Centralizers by lifting through the composition series N_i = <a_i, ..., a_n>.

If C centralises S modulo N_i, then for every s in S the map
c -> [c, s] N_{i+1} is a homomorphism from C into the central factor
N_i / N_{i+1} of order p, so the next C is the kernel of a linear map
over GF(p). The same works modulo a normal subgroup M, using the series
N_i M.
"""
from __future__ import annotations

import logging
from typing import Dict, Iterable, List, Literal, Optional, Sequence

from pcgroup.configuration.config_loader import load_config
from pcgroup.errors import PresentationError
from pcgroup.linalg.gfp import FpMatrix, nullspace
from pcgroup.pcp.collector import commutator, multiply, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.induced import (
    InducedSequence,
    _close,
    _sift,
    elements,
    subgroup_product,
    trivial_subgroup,
    whole_group,
)

logger = logging.getLogger(__name__)

Method = Literal["auto", "lifting", "brute"]


def _layer_table(pcp: PcPresentation, modulo: InducedSequence, i: int) -> Dict[int, NormalWord]:
    table = {d: g for d, g in zip(modulo.pivots, modulo.gens)}
    for j in range(i, pcp.n):
        table.setdefault(j, pcp.generator(j))
    return table


def _lifting(
    pcp: PcPresentation,
    targets: Sequence[NormalWord],
    start: InducedSequence,
    modulo: InducedSequence,
) -> InducedSequence:
    c = start
    skip = set(modulo.pivots)
    for i in range(pcp.n):
        if i in skip or c.is_trivial():
            continue
        table = _layer_table(pcp, modulo, i)
        rows: List[List[int]] = []
        for member in c.gens:
            row = []
            for s in targets:
                residual, witness = _sift(pcp, table, commutator(pcp, member, s))
                if any(residual):
                    raise PresentationError(f"commutator escaped layer {i}; is the presentation consistent?")
                row.append(witness.get(i, 0))
            rows.append(row)
        if not any(any(r) for r in rows):
            continue
        kernel = nullspace(FpMatrix.from_rows(pcp.p, rows).transpose())
        gens: List[NormalWord] = []
        for vector in kernel:
            x = pcp.identity()
            for member, e in zip(c.gens, vector):
                if e:
                    x = multiply(pcp, x, power(pcp, member, e))
            gens.append(x)
        gens += [power(pcp, member, pcp.p) for member in c.gens]
        gens += [commutator(pcp, a, b) for k, a in enumerate(c.gens) for b in c.gens[:k]]
        c = _close(pcp, gens, c.gens)
        logger.debug("centralizer layer %d: order %d", i, c.order)
    return c


def _brute(
    pcp: PcPresentation,
    targets: Sequence[NormalWord],
    start: InducedSequence,
    modulo: InducedSequence,
) -> InducedSequence:
    table = {d: g for d, g in zip(modulo.pivots, modulo.gens)}

    def in_modulo(x: NormalWord) -> bool:
        return not any(_sift(pcp, table, x)[0])

    found = [x for x in elements(start) if all(in_modulo(commutator(pcp, x, s)) for s in targets)]
    return _close(pcp, found)


def centralizer(
    pcp: PcPresentation,
    targets: Iterable[NormalWord],
    within: Optional[InducedSequence] = None,
    modulo: Optional[InducedSequence] = None,
    method: Method = "auto",
) -> InducedSequence:
    """
    Elements of `within` (default G) commuting with every target, modulo the
    normal subgroup `modulo` when given.
    """
    targets = [t for t in targets if any(t)]
    modulo = modulo if modulo is not None else trivial_subgroup(pcp)
    start = within if within is not None else whole_group(pcp)
    if not modulo.is_trivial():
        start = subgroup_product(start, modulo)
    if method == "auto":
        method = "brute" if start.order <= load_config().limits.brute_force_centralizer_order else "lifting"
    if not targets:
        return start
    if method == "brute":
        return _brute(pcp, targets, start, modulo)
    if method == "lifting":
        return _lifting(pcp, targets, start, modulo)
    raise PresentationError(f"unknown centralizer method {method!r}")


def center(pcp: PcPresentation, method: Method = "auto") -> InducedSequence:
    return centralizer(pcp, pcp.generators(), method=method)


def subgroup_center(pcp: PcPresentation, sub: InducedSequence, method: Method = "auto") -> InducedSequence:
    return centralizer(pcp, sub.gens, within=sub, method=method)


def center_modulo(pcp: PcPresentation, normal: InducedSequence) -> InducedSequence:
    """Preimage of Z(G / normal)."""
    return centralizer(pcp, pcp.generators(), modulo=normal, method="lifting")
