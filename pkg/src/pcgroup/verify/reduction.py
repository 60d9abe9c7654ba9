"""
Small generating sets for a subgroup that carries the lower central series
of G from gamma_2 on, and the standard generator pair of a 2-generator
group of class 5.
"""
from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Tuple

from pcgroup.errors import StructureContradiction, ReductionError
from pcgroup.pcp.collector import commutator, multiply, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.induced import InducedSequence, induced_sequence, same_subgroup, subgroup_product
from pcgroup.subgroups.series import derived_subgroup
from pcgroup.verify.hypotheses import require_hypotheses
from pcgroup.verify.structure import GroupStructure, structure

logger = logging.getLogger(__name__)

# bound on candidate pairs tried before giving up
MAX_PAIR_CANDIDATES = 200_000


def coset_representatives(s: GroupStructure) -> Iterator[NormalWord]:
    """Nonidentity products of the Frattini-quotient basis, lexicographic in the exponents."""
    basis = s.frattini_quotient.basis()
    for exps in itertools.product(range(s.p), repeat=len(basis)):
        if any(exps):
            yield s.product_of(*(power(s.pcp, g, e) for g, e in zip(basis, exps) if e))


def carries_lower_central_series(s: GroupStructure, gens: Sequence[NormalWord]) -> bool:
    """G' = H' gamma_3(G) for H = <gens>."""
    h = induced_sequence(s.pcp, gens)
    return same_subgroup(subgroup_product(derived_subgroup(s.pcp, h), s.gamma(3)), s.gamma(2))


def reduce_generators(pcp: PcPresentation) -> InducedSequence:
    """
    A normal subgroup H with gamma_i(H) = gamma_i(G) for i >= 2: 2-generated
    when G'/gamma_3 has order p, 3-generated when it is elementary of order p^2.
    """
    s = structure(pcp)
    g2, g3 = s.gamma(2), s.gamma(3)
    quotient_rank = g2.length - g3.length
    if quotient_rank == 0:
        raise ReductionError("G' = gamma_3, no reduction is defined")
    tops = s.frattini_quotient.basis()
    pairs = [(x, y) for i, x in enumerate(tops) for y in tops[i + 1:]]

    if quotient_rank == 1:
        for x, y in pairs:
            if commutator(pcp, x, y) not in g3:
                logger.debug("G'/gamma_3 generated by [%s, %s]", pcp.format_word(x), pcp.format_word(y))
                return induced_sequence(pcp, [x, y])
        raise StructureContradiction("no generator commutator spans G'/gamma_3")

    elementary = all(power(pcp, x, pcp.p) in g3 for x in g2.gens)
    if quotient_rank != 2 or not elementary:
        raise ReductionError(f"G'/gamma_3 of order p^{quotient_rank} is neither cyclic of order p nor elementary of order p^2")

    gens = _three_generators(s, pairs)
    if gens is None or not carries_lower_central_series(s, gens):
        logger.debug("case analysis gave no subgroup, searching triples")
        gens = next((list(t) for t in itertools.combinations(tops, 3) if carries_lower_central_series(s, t)), None)
    if gens is None:
        raise StructureContradiction("no 3-generator subgroup carries the lower central series")
    return induced_sequence(pcp, gens)


def _three_generators(s: GroupStructure, pairs: List[Tuple[NormalWord, NormalWord]]) -> Optional[List[NormalWord]]:
    pcp, g3 = s.pcp, s.gamma(3)
    first = next(((x, y) for x, y in pairs if commutator(pcp, x, y) not in g3), None)
    if first is None:
        return None
    a, b = first
    ab = commutator(pcp, a, b)
    span = subgroup_product(induced_sequence(pcp, [ab]), g3)
    second = next(((x, y) for x, y in pairs if commutator(pcp, x, y) not in span), None)
    if second is None:
        return None
    c, d = second
    cd = commutator(pcp, c, d)

    crossing = [(a, b, c, d), (a, b, d, c), (b, a, c, d), (b, a, d, c)]
    offending = [(x, x2, y, y2) for x, x2, y, y2 in crossing if commutator(pcp, x, y) not in g3]
    if not offending:
        return [a, multiply(pcp, b, c), d]
    x, x2, y, y2 = offending[0]
    alpha, beta = _coordinates(s, commutator(pcp, x, y), ab, cd)
    if alpha is None:
        return None
    return [x, y, y2] if alpha else [x, x2, y]


def _coordinates(s: GroupStructure, target: NormalWord, e1: NormalWord, e2: NormalWord) -> Tuple[Optional[int], Optional[int]]:
    """(alpha, beta) with target = e1^alpha e2^beta modulo gamma_3."""
    pcp = s.pcp
    for alpha in range(s.p):
        for beta in range(s.p):
            guess = multiply(pcp, power(pcp, e1, alpha), power(pcp, e2, beta))
            if multiply(pcp, target, power(pcp, guess, -1)) in s.gamma(3):
                return alpha, beta
    return None, None


def standard_pair_properties(s: GroupStructure, a: NormalWord, b: NormalWord) -> List[Tuple[str, bool]]:
    """Normal-form properties of a standard pair (a, b), each with its label."""
    pcp = s.pcp
    ba = commutator(pcp, b, a)
    baa = commutator(pcp, ba, a)
    baaa = commutator(pcp, baa, a)
    g = s.gamma
    return [
        ("[b,a] generates gamma_2/gamma_3", ba not in g(3)),
        ("[b,a,a] generates gamma_3/gamma_4", baa not in g(4)),
        ("[b,a,b] in gamma_4", commutator(pcp, ba, b) in g(4)),
        ("[b,a,a,a] generates gamma_4/gamma_5", baaa not in g(5)),
        ("[b,a,a,b] in gamma_5", commutator(pcp, baa, b) in g(5)),
        ("[b,a,a,a,b] generates gamma_5/gamma_6", commutator(pcp, baaa, b) not in g(6)),
        ("[b,a,a,a,a] in gamma_6", commutator(pcp, baaa, a) in g(6)),
    ]


def is_standard_pair(s: GroupStructure, a: NormalWord, b: NormalWord) -> bool:
    return s.independent_mod_frattini([a, b]) and all(ok for _, ok in standard_pair_properties(s, a, b))


def standard_pair(pcp: PcPresentation) -> Tuple[NormalWord, NormalWord]:
    """
    Generators a, b of a subgroup carrying the lower central series, in the
    normal form above. The presentation's first two generators are tried
    first, then pairs of coset representatives modulo Phi(G) in
    lexicographic order.
    """
    require_hypotheses(pcp)
    s = structure(pcp)
    if pcp.n >= 2:
        a, b = pcp.generator(0), pcp.generator(1)
        if is_standard_pair(s, a, b):
            return a, b
    tried = 0
    reps = list(coset_representatives(s))
    for a in reps:
        for b in reps:
            tried += 1
            if tried > MAX_PAIR_CANDIDATES:
                raise StructureContradiction(f"no standard pair among the first {MAX_PAIR_CANDIDATES} candidates")
            if is_standard_pair(s, a, b):
                logger.debug("standard pair after %d candidates: a=%s b=%s", tried, pcp.format_word(a), pcp.format_word(b))
                return a, b
    raise StructureContradiction("no pair of coset representatives is a standard pair")
