""" Imposing the relators of a finite presentation on a p-cover. """
from __future__ import annotations

import logging
from typing import List, Mapping, Tuple

from pcgroup.pcp.collector import evaluate
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.quotient.cover import TailedPresentation, eliminate
from pcgroup.quotient.fp import FpPresentation

logger = logging.getLogger(__name__)


def relator_constraints(tailed: TailedPresentation, fp: FpPresentation) -> List[Tuple[int, ...]]:
    """Tail vector of every relator evaluated at the lifted images."""
    rows = []
    for r in fp.all_relators():
        value = tailed.tail_part(evaluate(tailed.pcp, r, tailed.images))
        if any(value):
            logger.debug("relator %s leaves tail %s", r, value)
            rows.append(value)
    return rows


def enforce_tailed(tailed: TailedPresentation, fp: FpPresentation) -> TailedPresentation:
    return eliminate(tailed, relator_constraints(tailed, fp))


def _first_tail(cover: PcPresentation) -> int:
    top = cover.max_weight
    return next((i for i, w in enumerate(cover.weights) if w == top), cover.n)


def enforce(cover: PcPresentation, fp: FpPresentation, images: Mapping[str, NormalWord]) -> PcPresentation:
    """
    Largest quotient of `cover` by its top-weight generators in which every
    relator of fp evaluates to the identity under `images`.
    """
    tailed = TailedPresentation(cover, _first_tail(cover), dict(images))
    return enforce_tailed(tailed, fp).pcp
