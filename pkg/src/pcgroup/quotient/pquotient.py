"""
Class-by-class p-quotient along the exponent-p central series. Stage c+1 is
the p-cover of stage c with the relators imposed; the run stops at the class
bound or once a stage adds no generators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from pcgroup.configuration.config_loader import load_config
from pcgroup.errors import PresentationError, ResourceCapError
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.quotient.cover import TailedPresentation, cover_with_images
from pcgroup.quotient.enforce import enforce_tailed
from pcgroup.quotient.fp import FpPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuotientResult:
    pcp: PcPresentation
    images: Dict[str, NormalWord]
    achieved_class: int
    stabilized: bool
    # order of the stage-c quotient for c = 0, 1, ...
    history: Tuple[int, ...] = field(default=())

    @property
    def order(self) -> int:
        return self.pcp.order


def trivial_stage(fp: FpPresentation) -> TailedPresentation:
    pcp = PcPresentation(p=fp.p, weights=(), consistent=True)
    return TailedPresentation(pcp, 0, {name: () for name in fp.generators})


def next_stage(stage: TailedPresentation, fp: FpPresentation) -> TailedPresentation:
    covered = cover_with_images(stage.pcp, stage.images)
    return enforce_tailed(covered, fp)


def p_quotient(fp: FpPresentation, max_class: Optional[int] = None) -> QuotientResult:
    cfg = load_config()
    if max_class is None:
        max_class = fp.max_class or cfg.quotient.default_class
    if max_class < 1:
        raise PresentationError(f"class bound must be at least 1, got {max_class}")
    cap = cfg.limits.max_generators

    stage = trivial_stage(fp)
    history: List[int] = [1]
    stabilized = False
    for c in range(1, max_class + 1):
        nxt = next_stage(stage, fp)
        if nxt.pcp.n == stage.pcp.n:
            stabilized = True
            break
        if nxt.pcp.n > cap:
            raise ResourceCapError(f"class {c} quotient needs {nxt.pcp.n} generators (cap {cap})")
        stage = nxt
        history.append(stage.pcp.order)
        logger.info("%s class %d: order %d^%d", fp.name or "quotient", c, fp.p, stage.pcp.n)
    else:
        # one more step decides whether the class bound cut the group short
        stabilized = next_stage(stage, fp).pcp.n == stage.pcp.n

    return QuotientResult(
        pcp=stage.pcp,
        images=dict(stage.images),
        achieved_class=stage.pcp.max_weight,
        stabilized=stabilized,
        history=tuple(history),
    )
