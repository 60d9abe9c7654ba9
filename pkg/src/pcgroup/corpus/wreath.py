"""
The Sylow 2-subgroup of S_8 (the iterated wreath product C_2 wr C_2 wr C_2,
order 2^7) as a power-commutator presentation. It has |G'/G''| = 2^3 with
G'' != 1, so Hall's bound for odd primes does not extend to p = 2.
"""
from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from sympy.combinatorics.perm_groups import PermutationGroup
from sympy.combinatorics.permutations import Permutation

from pcgroup.errors import PresentationError
from pcgroup.pcp.presentation import NormalWord, PcPresentation

logger = logging.getLogger(__name__)

DEGREE = 8
SYLOW2_S8_GENERATORS = (
    [[0, 1]],
    [[0, 2], [1, 3]],
    [[0, 4], [1, 5], [2, 6], [3, 7]],
)


def sylow2_permutation_group() -> PermutationGroup:
    return PermutationGroup([Permutation(cycles, size=DEGREE) for cycles in SYLOW2_S8_GENERATORS])


def _subgroup(gens: Sequence[Permutation], degree: int) -> PermutationGroup:
    return PermutationGroup(list(gens) or [Permutation(degree - 1)])


def _exponent_p_central_series(group: PermutationGroup, p: int) -> List[PermutationGroup]:
    """P_1 = G, P_{k+1} = [P_k, G] P_k^p, down to the trivial group."""
    series = [group]
    while series[-1].order() > 1:
        top = series[-1]
        commutators = group.commutator(top, group)
        powers = {x ** p for x in top.generate()}
        below = _subgroup(list(commutators.generators) + [x for x in powers if not x.is_Identity], group.degree)
        if below.order() == top.order():
            raise PresentationError("exponent-p central series stalled; not a p-group")
        series.append(below)
    return series


def _refine(top: PermutationGroup, below: PermutationGroup, degree: int) -> List[Permutation]:
    """Elements of top, each doubling the subgroup generated with below; generators first."""
    picked: List[Permutation] = []
    current = below.order()
    for x in itertools.chain(top.generators, top.generate()):
        if current == top.order():
            break
        order = _subgroup(list(below.generators) + picked + [x], degree).order()
        if order > current:
            picked.append(x)
            current = order
    return picked


def _pc_sequence(series: List[PermutationGroup], p: int) -> Tuple[List[Permutation], List[int]]:
    """Generators refining each layer P_k / P_{k+1}, with their layer as weight."""
    degree = series[0].degree
    sequence: List[Permutation] = []
    weights: List[int] = []
    for k, (top, below) in enumerate(zip(series, series[1:]), start=1):
        picked = _refine(top, below, degree)
        if p ** len(picked) != top.order() // below.order():
            raise PresentationError(f"layer {k} of order {top.order() // below.order()} refined by {len(picked)} elements")
        sequence += picked
        weights += [k] * len(picked)
    if p ** len(sequence) != series[0].order():
        raise PresentationError(f"sequence of length {len(sequence)} does not reach order {series[0].order()}")
    return sequence, weights


class _Sifter:
    def __init__(self, sequence: List[Permutation], degree: int) -> None:
        self.sequence = sequence
        # tails[i] = <g_i, ..., g_n>
        self.tails = [_subgroup(sequence[i:], degree) for i in range(len(sequence))] + [_subgroup([], degree)]

    def exponents(self, x: Permutation) -> NormalWord:
        out = []
        for i, g in enumerate(self.sequence):
            if self.tails[i + 1].contains(x):
                out.append(0)
            else:
                out.append(1)
                x = ~g * x
        if not x.is_Identity:
            raise PresentationError("element is not in the group spanned by the sequence")
        return tuple(out)


def pcp_from_permutation_group(group: PermutationGroup, p: int = 2) -> PcPresentation:
    """Power-commutator presentation of a permutation 2-group, refining its exponent-2 central series."""
    if p != 2:
        raise PresentationError("only relative order 2 is supported for permutation groups")
    sequence, weights = _pc_sequence(_exponent_p_central_series(group, p), p)
    sifter = _Sifter(sequence, group.degree)
    power_tails: Dict[int, NormalWord] = {}
    comm_tails: Dict[Tuple[int, int], NormalWord] = {}
    for i, g in enumerate(sequence):
        power_tails[i] = sifter.exponents(g ** p)
        for j, h in enumerate(sequence[:i]):
            comm_tails[(i, j)] = sifter.exponents(~g * ~h * g * h)
    pcp = PcPresentation(p=p, weights=tuple(weights), power_tails=power_tails, comm_tails=comm_tails)
    logger.debug("permutation group of order %d -> %r", group.order(), pcp)
    return pcp


def sylow2_of_s8() -> PcPresentation:
    return pcp_from_permutation_group(sylow2_permutation_group())
