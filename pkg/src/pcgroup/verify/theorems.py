"""
Structural claims about groups with |G'/G''| = p^3 and G'' != 1, each
checked as a list of named assertions. A failed assertion is a
counterexample and is reported, never dropped.
"""
from __future__ import annotations

import logging
from typing import Sequence

from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.centralizer import subgroup_center
from pcgroup.subgroups.induced import (
    commutator_subgroup,
    induced_sequence,
    is_normal,
    is_subgroup,
    same_subgroup,
    subgroup_product,
)
from pcgroup.subgroups.invariants import abelian_invariants, is_elementary_abelian_section
from pcgroup.subgroups.series import derived_subgroup, frattini_rank, lower_central_series
from pcgroup.verify.hypotheses import require_hypotheses
from pcgroup.verify.report import Checklist
from pcgroup.verify.structure import structure

logger = logging.getLogger(__name__)


def _order(p: int, length: int) -> str:
    return f"{p}^{length}"


def verify_theorem_1(pcp: PcPresentation) -> Checklist:
    """|G'/gamma_3| = p and G'' = gamma_5, with [G', gamma_3] <= gamma_5 and |gamma_5| = p."""
    require_hypotheses(pcp)
    s = structure(pcp)
    p = pcp.p
    g2, g3, g5 = s.gamma(2), s.gamma(3), s.gamma(5)
    dd = s.derived_term(2)
    out = Checklist(title="derived length two, |G'/G''| = p^3")
    out.add("|G'/gamma_3| = p", g2.length - g3.length == 1, _order(p, g2.length - g3.length))
    out.add("G'' = gamma_5", same_subgroup(dd, g5), f"|G''| = {_order(p, dd.length)}, |gamma_5| = {_order(p, g5.length)}")
    out.add("[G', gamma_3] <= gamma_5", is_subgroup(commutator_subgroup(pcp, g2, g3), g5))
    out.add("|gamma_5| = p", g5.length == 1, _order(p, g5.length))
    logger.info("theorem 1 checks on %r: %s", pcp, "pass" if out.passed else "FAIL")
    return out


def verify_hall_bounds(pcp: PcPresentation) -> Checklist:
    """If G'' != 1 then |G'/G''| >= p^3; for odd p with equality, |G''| = p."""
    s = structure(pcp)
    p = pcp.p
    g1, g2 = s.derived_term(1), s.derived_term(2)
    out = Checklist(title="Hall bounds")
    if g2.is_trivial():
        out.not_applicable("|G'/G''| >= p^3", "G'' = 1")
        out.not_applicable("|G''| = p", "G'' = 1")
        return out
    rank = g1.length - g2.length
    out.add("|G'/G''| >= p^3", rank >= 3, _order(p, rank))
    if p % 2 == 1 and rank == 3:
        out.add("|G''| = p", g2.length == 1, _order(p, g2.length))
    else:
        out.not_applicable("|G''| = p", f"p = {p}, |G'/G''| = {_order(p, rank)}")
    return out


def verify_transfer_lemma(pcp: PcPresentation, h_gens: Sequence[NormalWord]) -> Checklist:
    """If G' = H' gamma_3(G) then gamma_i(H) = gamma_i(G) for i >= 2 and H is normal."""
    s = structure(pcp)
    h = induced_sequence(pcp, h_gens)
    out = Checklist(title="lower central series transfer")
    h_lcs = lower_central_series(pcp, h)
    if not same_subgroup(subgroup_product(derived_subgroup(pcp, h), s.gamma(3)), s.gamma(2)):
        out.not_applicable("precondition G' = H' gamma_3", "precondition fails")
        return out
    out.add("precondition G' = H' gamma_3", True)
    depth = max(len(s.lcs), len(h_lcs))
    for i in range(2, depth + 1):
        h_term = h_lcs[i - 1] if i - 1 < len(h_lcs) else h_lcs[-1]
        out.add(f"gamma_{i}(H) = gamma_{i}(G)", same_subgroup(h_term, s.gamma(i)))
    out.add("H normal in G", is_normal(pcp, h))
    return out


def verify_chain(pcp: PcPresentation) -> Checklist:
    """G > G' > gamma_3 > gamma_4 >= G'' > 1, refined by G'' = gamma_5."""
    require_hypotheses(pcp)
    s = structure(pcp)
    g = [s.gamma(i) for i in range(1, 6)]
    dd = s.derived_term(2)
    out = Checklist(title="normal series")
    for i in range(3):
        out.add(f"gamma_{i + 1} > gamma_{i + 2}", g[i].length > g[i + 1].length)
    out.add("gamma_4 >= G''", is_subgroup(dd, g[3]))
    out.add("G'' > 1", not dd.is_trivial())
    out.add("gamma_4 > gamma_5", g[3].length > g[4].length)
    out.add("G'' = gamma_5", same_subgroup(dd, g[4]))
    return out


def verify_elementary_derived_quotient(pcp: PcPresentation) -> Checklist:
    require_hypotheses(pcp)
    s = structure(pcp)
    g1, g2 = s.derived_term(1), s.derived_term(2)
    out = Checklist(title="G'/G'' elementary abelian")
    out.add("G'/G'' elementary abelian", is_elementary_abelian_section(pcp, g1, g2))
    out.add("rank of G'/G'' is 3", g1.length - g2.length == 3, str(g1.length - g2.length))
    return out


def verify_burnside_lemma(pcp: PcPresentation) -> Checklist:
    """Z(G') cyclic forces G' cyclic, so a noncyclic G' has a noncyclic centre."""
    s = structure(pcp)
    g1 = s.derived_term(1)
    out = Checklist(title="centre of the derived subgroup")
    if frattini_rank(pcp, g1) <= 1:
        out.not_applicable("Z(G') noncyclic", "G' cyclic")
        return out
    invariants = abelian_invariants(pcp, subgroup_center(pcp, g1))
    out.add("Z(G') noncyclic", len(invariants) >= 2, str(invariants))
    return out
