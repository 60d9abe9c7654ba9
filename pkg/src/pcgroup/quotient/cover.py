"""
p-covering groups. Every power and commutator relation that does not define
a generator gets a new central generator of order p (a tail) appended, as
does the image of every abstract generator that is not itself a generator.
Consistency then forces linear relations among the tails, and the pivot
tails are eliminated.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from pcgroup.errors import PresentationError
from pcgroup.linalg.gfp import FpMatrix, echelonize
from pcgroup.pcp.consistency import check_pairs
from pcgroup.pcp.presentation import Definition, NormalWord, PcPresentation

logger = logging.getLogger(__name__)

Images = Dict[str, NormalWord]


@dataclass(frozen=True)
class TailedPresentation:
    """A presentation whose generators from `first_tail` on are central tails."""
    pcp: PcPresentation
    first_tail: int
    images: Mapping[str, NormalWord]

    @property
    def tail_count(self) -> int:
        return self.pcp.n - self.first_tail

    def tail_part(self, w: NormalWord) -> Tuple[int, ...]:
        if any(w[: self.first_tail]):
            raise PresentationError("value does not lie in the tail subgroup")
        return w[self.first_tail:]


def _defined_slots(pcp: PcPresentation) -> set:
    return {tuple(d) for d in pcp.definitions.values()}


def add_tails(pcp: PcPresentation, images: Optional[Mapping[str, NormalWord]] = None) -> TailedPresentation:
    """Presentation of the (not yet consistent) cover with one tail per free slot."""
    images = dict(images or {})
    n = pcp.n
    defined = _defined_slots(pcp)
    slots: List[Definition] = []
    slots += [("image", name) for name in images if ("image", name) not in defined]
    slots += [("power", i) for i in range(n) if ("power", i) not in defined]
    slots += [
        ("commutator", i, j) for i in range(n) for j in range(i) if ("commutator", i, j) not in defined
    ]
    m = n + len(slots)

    def lift(w: NormalWord) -> List[int]:
        return list(w) + [0] * len(slots)

    power_tails = {i: lift(pcp.power_tail(i)) for i in range(n)}
    comm_tails = {(i, j): lift(pcp.comm_tail(i, j)) for i in range(n) for j in range(i)}
    lifted_images = {name: lift(w) for name, w in images.items()}
    definitions: Dict[int, Definition] = dict(pcp.definitions)
    for k, slot in enumerate(slots, start=n):
        definitions[k] = slot
        if slot[0] == "image":
            lifted_images[slot[1]][k] = 1
        elif slot[0] == "power":
            power_tails[slot[1]][k] = 1
        else:
            comm_tails[(slot[1], slot[2])][k] = 1

    tail_weight = pcp.max_weight + 1
    cover = PcPresentation(
        p=pcp.p,
        weights=pcp.weights + (tail_weight,) * len(slots),
        power_tails={i: tuple(w) for i, w in power_tails.items()},
        comm_tails={k: tuple(w) for k, w in comm_tails.items()},
        definitions=definitions,
        names=pcp.names + tuple(f"g{k + 1}" for k in range(n, m)),
    )
    logger.debug("added %d tails to %r", len(slots), pcp)
    return TailedPresentation(cover, n, {name: tuple(w) for name, w in lifted_images.items()})


def consistency_constraints(tailed: TailedPresentation) -> List[Tuple[int, ...]]:
    """Tail relations forced by the consistency checks among the old generators."""
    rows = []
    for _check, _indices, left, right in check_pairs(tailed.pcp, upto=tailed.first_tail):
        residual = tailed.tail_part(_as_tail(tailed, left, right))
        if any(residual):
            rows.append(residual)
    return rows


def _as_tail(tailed: TailedPresentation, left: NormalWord, right: NormalWord) -> NormalWord:
    # tails are central of order p, so left * right^-1 is a plain vector difference
    f = tailed.first_tail
    if left[:f] != right[:f]:
        raise PresentationError("consistency checks disagree above the tails; base presentation inconsistent")
    p = tailed.pcp.p
    return tuple([0] * f + [(a - b) % p for a, b in zip(left[f:], right[f:])])


def eliminate(tailed: TailedPresentation, constraints: Sequence[Sequence[int]]) -> TailedPresentation:
    """
    Quotient by the tail relations `constraints`. Rows are reduced with the
    highest tail index as the leading column, so the highest-index tails are
    the ones eliminated and the survivors keep their relative order.
    """
    pcp, f, t = tailed.pcp, tailed.first_tail, tailed.tail_count
    p = pcp.p
    rows = [list(reversed(r)) for r in constraints if any(r)]
    substitution: Dict[int, List[int]] = {}
    if rows:
        ech = echelonize(FpMatrix.from_rows(p, rows, cols=t))
        reduced = ech.matrix.tolist()
        for r, col in enumerate(ech.pivots):
            row = list(reversed(reduced[r]))
            pivot = t - 1 - col
            # t_pivot = -sum(row[k] t_k) over the surviving tails
            substitution[pivot] = [(-x) % p if k != pivot else 0 for k, x in enumerate(row)]
    survivors = [k for k in range(t) if k not in substitution]

    def reduce(w: NormalWord) -> NormalWord:
        tail = list(w[f:])
        for pivot, replacement in substitution.items():
            c = tail[pivot]
            if c:
                tail = [(a + c * b) % p for a, b in zip(tail, replacement)]
                tail[pivot] = 0
        return tuple(w[:f]) + tuple(tail[k] for k in survivors)

    definitions = {i: d for i, d in pcp.definitions.items() if i < f}
    for new, old in enumerate(survivors, start=f):
        definitions[new] = pcp.definitions[f + old]

    result = PcPresentation(
        p=p,
        weights=pcp.weights[:f] + pcp.weights[f:f + len(survivors)],
        power_tails={i: reduce(w) for i, w in pcp.power_tails.items() if i < f},
        comm_tails={k: reduce(w) for k, w in pcp.comm_tails.items() if k[0] < f},
        definitions=definitions,
        names=pcp.names[:f + len(survivors)],
        consistent=True,
    )
    logger.debug("eliminated %d of %d tails", len(substitution), t)
    return TailedPresentation(result, f, {name: reduce(w) for name, w in tailed.images.items()})


def cover_with_images(
    pcp: PcPresentation, images: Optional[Mapping[str, NormalWord]] = None
) -> TailedPresentation:
    """The consistent p-cover, with the abstract generator images lifted into it."""
    if not pcp.consistent and pcp.n:
        logger.debug("covering a presentation not marked consistent: %r", pcp)
    tailed = add_tails(pcp, images)
    return eliminate(tailed, consistency_constraints(tailed))


def p_cover(pcp: PcPresentation) -> PcPresentation:
    return cover_with_images(pcp).pcp
