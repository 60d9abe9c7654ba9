""" Central and derived series, Frattini subgroup and minimal generating sets. """
from __future__ import annotations

import logging
from typing import List, Optional, Tuple

from pcgroup.errors import PresentationError
from pcgroup.pcp.collector import commutator, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.induced import (
    InducedSequence,
    _close,
    _sift,
    is_normal,
    whole_group,
)

logger = logging.getLogger(__name__)


def _descend(current: InducedSequence, nxt: InducedSequence, what: str) -> None:
    if nxt.length >= current.length and not current.is_trivial():
        raise PresentationError(f"{what} stalled at order {current.order}; group is not nilpotent")


def lower_central_series(pcp: PcPresentation, subgroup: Optional[InducedSequence] = None) -> List[InducedSequence]:
    """[gamma_1 = G, gamma_2, ..., 1] with gamma_{i+1} = [gamma_i, G]."""
    top = subgroup if subgroup is not None else whole_group(pcp)
    terms = [top]
    while not terms[-1].is_trivial():
        current = terms[-1]
        nxt = _close(pcp, (commutator(pcp, x, g) for x in current.gens for g in top.gens), top.gens)
        _descend(current, nxt, "lower central series")
        terms.append(nxt)
    logger.debug("lower central series orders: %s", [t.order for t in terms])
    return terms


def nilpotency_class(pcp: PcPresentation, subgroup: Optional[InducedSequence] = None) -> int:
    return len(lower_central_series(pcp, subgroup)) - 1


def derived_series(pcp: PcPresentation, subgroup: Optional[InducedSequence] = None) -> List[InducedSequence]:
    top = subgroup if subgroup is not None else whole_group(pcp)
    terms = [top]
    while not terms[-1].is_trivial():
        current = terms[-1]
        gens = [commutator(pcp, x, y) for i, x in enumerate(current.gens) for y in current.gens[:i]]
        nxt = _close(pcp, gens, current.gens)
        _descend(current, nxt, "derived series")
        terms.append(nxt)
    return terms


def derived_subgroup(pcp: PcPresentation, subgroup: Optional[InducedSequence] = None) -> InducedSequence:
    series = derived_series(pcp, subgroup)
    return series[1] if len(series) > 1 else series[0]


def exponent_p_central_series(pcp: PcPresentation) -> List[InducedSequence]:
    """P_1 = G, P_{i+1} = [P_i, G] P_i^p, down to the trivial group."""
    top = whole_group(pcp)
    terms = [top]
    while not terms[-1].is_trivial():
        current = terms[-1]
        gens = [commutator(pcp, x, g) for x in current.gens for g in top.gens]
        gens += [power(pcp, x, pcp.p) for x in current.gens]
        nxt = _close(pcp, gens, top.gens)
        _descend(current, nxt, "exponent-p central series")
        terms.append(nxt)
    return terms


def exponent_p_class(pcp: PcPresentation) -> int:
    return len(exponent_p_central_series(pcp)) - 1


def frattini(pcp: PcPresentation, subgroup: Optional[InducedSequence] = None) -> InducedSequence:
    """Phi(H) = H^p [H, H]."""
    top = subgroup if subgroup is not None else whole_group(pcp)
    gens = [power(pcp, x, pcp.p) for x in top.gens]
    gens += [commutator(pcp, x, y) for i, x in enumerate(top.gens) for y in top.gens[:i]]
    return _close(pcp, gens, top.gens)


def frattini_rank(pcp: PcPresentation, subgroup: Optional[InducedSequence] = None) -> int:
    """Minimal number of generators (Burnside basis theorem)."""
    top = subgroup if subgroup is not None else whole_group(pcp)
    return top.length - frattini(pcp, top).length


class FrattiniQuotient:
    """
    Coordinates of G / Phi(G) as a vector space over GF(p). Basis element k
    is the generator a_i for the k-th index i that is not a pivot of Phi(G).
    """

    def __init__(self, pcp: PcPresentation) -> None:
        self.pcp = pcp
        self.phi = frattini(pcp)
        phi_pivots = set(self.phi.pivots)
        self.top: Tuple[int, ...] = tuple(i for i in range(pcp.n) if i not in phi_pivots)
        self._table = {d: g for d, g in zip(self.phi.pivots, self.phi.gens)}
        for i in self.top:
            self._table[i] = pcp.generator(i)

    @property
    def rank(self) -> int:
        return len(self.top)

    def basis(self) -> List[NormalWord]:
        return [self.pcp.generator(i) for i in self.top]

    def coordinates(self, x: NormalWord) -> Tuple[int, ...]:
        residual, witness = _sift(self.pcp, self._table, x)
        assert not any(residual)
        return tuple(witness.get(i, 0) for i in self.top)


def minimal_generators(pcp: PcPresentation) -> List[NormalWord]:
    """Representatives of a basis of G / Phi(G); they generate G."""
    return FrattiniQuotient(pcp).basis()


def upper_central_series(pcp: PcPresentation) -> List[InducedSequence]:
    """[1, Z(G), Z_2(G), ...] up to G."""
    from pcgroup.subgroups.centralizer import center_modulo

    terms = [_close(pcp, ())]
    while terms[-1].length < pcp.n:
        nxt = center_modulo(pcp, terms[-1])
        if nxt.length <= terms[-1].length:
            raise PresentationError(f"upper central series stalled at order {nxt.order}; group is not nilpotent")
        terms.append(nxt)
    return terms


def is_central_series(pcp: PcPresentation, series: List[InducedSequence]) -> bool:
    return all(
        is_normal(pcp, term)
        and all(commutator(pcp, x, g) in below for x in term.gens for g in pcp.generators())
        for term, below in zip(series, series[1:])
    )
