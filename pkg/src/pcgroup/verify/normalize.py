"""
Minimal generating sets {a, b, u_1, ..., u_r} where (a, b) is a standard
pair and every u_i centralises G', with

    [a, u_i] in gamma_5,  [b, u_i] in gamma_4,  [u_i, u_j] in gamma_5.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from pcgroup.errors import StructureContradiction
from pcgroup.linalg.gfp import FpMatrix, rank
from pcgroup.pcp.collector import commutator, multiply, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.verify.hypotheses import require_hypotheses
from pcgroup.verify.reduction import standard_pair
from pcgroup.verify.report import Checklist
from pcgroup.verify.structure import GroupStructure, structure

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormalizedGenerators:
    a: NormalWord
    b: NormalWord
    us: Tuple[NormalWord, ...]

    @property
    def all(self) -> List[NormalWord]:
        return [self.a, self.b, *self.us]


def _extend_to_basis(s: GroupStructure, a: NormalWord, b: NormalWord) -> List[NormalWord]:
    """Basis generators of G/Phi(G) that extend (a, b) to a basis."""
    fq = s.frattini_quotient
    rows = [list(fq.coordinates(a)), list(fq.coordinates(b))]
    extra = []
    for i, g in enumerate(fq.basis()):
        e = [0] * fq.rank
        e[i] = 1
        if rank(FpMatrix.from_rows(s.p, rows + [e], cols=fq.rank)) > len(rows):
            rows.append(e)
            extra.append(g)
    return extra


def _search(s: GroupStructure, u: NormalWord, left: NormalWord, right: NormalWord, ok) -> Optional[NormalWord]:
    """u left^x right^y for the lexicographically least (x, y) accepted by ok."""
    for x, y in itertools.product(range(s.p), repeat=2):
        candidate = s.product_of(u, power(s.pcp, left, x), power(s.pcp, right, y))
        if ok(candidate):
            return candidate
    return None


def _clear_modulo_gamma3(s: GroupStructure, u: NormalWord, a: NormalWord, b: NormalWord) -> NormalWord:
    """u <- u b^-alpha a^beta so that [u, a] and [u, b] lie in gamma_3."""
    pcp, g3 = s.pcp, s.gamma(3)
    ba = commutator(pcp, b, a)
    alpha = s.log(commutator(pcp, u, a), ba, g3)
    beta = s.log(commutator(pcp, u, b), ba, g3)

    def ok(v: NormalWord) -> bool:
        return commutator(pcp, v, a) in g3 and commutator(pcp, v, b) in g3

    if alpha is not None and beta is not None:
        candidate = s.product_of(u, power(pcp, b, -alpha), power(pcp, a, beta))
        if ok(candidate):
            return candidate
    found = _search(s, u, power(pcp, b, -1), a, ok)
    if found is None:
        raise StructureContradiction(f"cannot move [u, a], [u, b] into gamma_3 for u = {pcp.format_word(u)}")
    return found


def _clear_modulo_gamma5(s: GroupStructure, u: NormalWord, a: NormalWord, b: NormalWord) -> NormalWord:
    """u <- u [b,a]^-alpha [b,a,a]^-beta so that [u, a] lies in gamma_5."""
    pcp = s.pcp
    g4, g5 = s.gamma(4), s.gamma(5)
    ba = commutator(pcp, b, a)
    baa = commutator(pcp, ba, a)
    baaa = commutator(pcp, baa, a)
    ua = commutator(pcp, u, a)

    def ok(v: NormalWord) -> bool:
        return commutator(pcp, v, a) in g5

    alpha = s.log(ua, baa, g4)
    if alpha is not None:
        rest = multiply(pcp, ua, power(pcp, baa, -alpha))
        beta = s.log(rest, baaa, g5)
        if beta is not None:
            candidate = s.product_of(u, power(pcp, ba, -alpha), power(pcp, baa, -beta))
            if ok(candidate):
                return candidate
    found = _search(s, u, power(pcp, ba, -1), power(pcp, baa, -1), ok)
    if found is None:
        raise StructureContradiction(f"cannot move [u, a] into gamma_5 for u = {pcp.format_word(u)}")
    return found


def normalized_properties(s: GroupStructure, gens: NormalizedGenerators) -> Checklist:
    pcp = s.pcp
    g4, g5 = s.gamma(4), s.gamma(5)
    derived = s.derived_term(1)
    out = Checklist(title="normalized generating set")
    out.add("minimal generating set", len(gens.all) == s.frattini_quotient.rank and s.independent_mod_frattini(gens.all))
    for i, u in enumerate(gens.us, start=1):
        out.add(f"[a,u{i}] in gamma_5", commutator(pcp, gens.a, u) in g5)
        out.add(f"[b,u{i}] in gamma_4", commutator(pcp, gens.b, u) in g4)
        out.add(f"u{i} centralises G'", all(not any(commutator(pcp, u, d)) for d in derived.gens))
        for j, v in enumerate(gens.us[i:], start=i + 1):
            out.add(f"[u{i},u{j}] in gamma_5", commutator(pcp, u, v) in g5)
    return out


def normalize_generating_set(pcp: PcPresentation) -> NormalizedGenerators:
    require_hypotheses(pcp)
    s = structure(pcp)
    a, b = standard_pair(pcp)
    us = [_clear_modulo_gamma5(s, _clear_modulo_gamma3(s, u, a, b), a, b) for u in _extend_to_basis(s, a, b)]
    gens = NormalizedGenerators(a, b, tuple(us))
    report = normalized_properties(s, gens)
    if not report.passed:
        failed = ", ".join(item.name for item in report.failures())
        raise StructureContradiction(f"normalized generating set violates: {failed}")
    logger.info("normalized generating set: a=%s b=%s, %d further generators", pcp.format_word(a), pcp.format_word(b), len(us))
    return gens
