""" Associativity and power checks that decide whether a presentation has order p^n. """
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple

from pcgroup.pcp.collector import _mul_gen, invert, multiply
from pcgroup.pcp.presentation import NormalWord, PcPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    check: str            # "associativity" | "power-left" | "power-right" | "power-self"
    indices: Tuple[int, ...]
    residual: NormalWord


def _times_gen(pcp: PcPresentation, u: NormalWord, i: int, times: int = 1) -> NormalWord:
    e = list(u)
    for _ in range(times):
        _mul_gen(pcp, e, i)
    return tuple(e)


def _residual(pcp: PcPresentation, left: NormalWord, right: NormalWord) -> NormalWord:
    return multiply(pcp, left, invert(pcp, right))


def check_pairs(
    pcp: PcPresentation, upto: Optional[int] = None
) -> Iterator[Tuple[str, Tuple[int, ...], NormalWord, NormalWord]]:
    """
    Yields (check, indices, left, right) for every test word. The two sides
    collect the same word along different bracketings. With `upto`, only
    generators below that index take part (central tails need no checks).
    """
    p = pcp.p
    n = pcp.n if upto is None else upto
    gens = pcp.generators()

    for k in range(n):
        for j in range(k):
            kj = multiply(pcp, gens[k], gens[j])
            for i in range(j):
                left = _times_gen(pcp, kj, i)
                right = multiply(pcp, gens[k], multiply(pcp, gens[j], gens[i]))
                yield "associativity", (k, j, i), left, right

    for j in range(n):
        tail_j = pcp.power_tail(j)
        top_j = pcp.generator(j, p - 1)
        for i in range(j):
            ji = multiply(pcp, gens[j], gens[i])
            # (a_j^p) a_i = a_j^(p-1) (a_j a_i)
            yield "power-left", (j, i), _times_gen(pcp, tail_j, i), multiply(pcp, top_j, ji)
            # a_j (a_i^p) = (a_j a_i) a_i^(p-1)
            yield (
                "power-right",
                (j, i),
                multiply(pcp, gens[j], pcp.power_tail(i)),
                _times_gen(pcp, ji, i, p - 1),
            )
        # a_j (a_j^p) = (a_j^p) a_j
        yield "power-self", (j,), multiply(pcp, gens[j], tail_j), _times_gen(pcp, tail_j, j)


def consistency_violations(pcp: PcPresentation) -> List[Violation]:
    """Empty iff the presentation defines a group of order p^n."""
    found = []
    for check, indices, left, right in check_pairs(pcp):
        if left != right:
            found.append(Violation(check, indices, _residual(pcp, left, right)))
    if found:
        logger.debug("%d consistency violations in %r", len(found), pcp)
    return found


def is_consistent(pcp: PcPresentation) -> bool:
    return not consistency_violations(pcp)
