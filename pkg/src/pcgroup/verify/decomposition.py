"""
Central decompositions G = HU with [H, U] = 1, U' <= gamma_5 and H at most
5-generated with gamma_i(H) = gamma_i(G) for i >= 2.

Starting from a normalized generating set, the u_i are rewritten so that
commutators among them and with a, b take the shapes z = [b,a,a,a,b] or
g = [b,a,a,a]. All commutators involved are central or linear, so each
rewriting is a small linear step; every result is verified afterwards.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from pcgroup.errors import EnumerationCapError, StructureContradiction
from pcgroup.pcp.collector import commutator, multiply, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.centralizer import centralizer
from pcgroup.subgroups.induced import (
    InducedSequence,
    induced_sequence,
    intersection,
    is_normal,
    is_subgroup,
    same_subgroup,
    subgroup_product,
    trivial_subgroup,
)
from pcgroup.subgroups.series import derived_subgroup, frattini_rank, lower_central_series
from pcgroup.verify.normalize import NormalizedGenerators, normalize_generating_set
from pcgroup.verify.report import Checklist
from pcgroup.verify.structure import GroupStructure, structure

logger = logging.getLogger(__name__)

MAX_H_GENERATORS = 5


@dataclass(frozen=True)
class Decomposition:
    h: InducedSequence
    u: InducedSequence
    h_generators: Tuple[NormalWord, ...]
    u_generators: Tuple[NormalWord, ...]
    checks: Checklist

    @property
    def h_generator_count(self) -> int:
        return len(self.h_generators)

    @property
    def u_generator_count(self) -> int:
        return len(self.u_generators)


class _Rewriter:
    """Commutator bookkeeping for one standard pair (a, b)."""

    def __init__(self, s: GroupStructure, a: NormalWord, b: NormalWord) -> None:
        self.s = s
        self.pcp = s.pcp
        self.a, self.b = a, b
        baaa = commutator(self.pcp, b, a, a, a)
        self.g = baaa
        self.z = commutator(self.pcp, baaa, b)
        self.trivial = trivial_subgroup(self.pcp)

    def comm(self, x: NormalWord, y: NormalWord) -> NormalWord:
        return commutator(self.pcp, x, y)

    def commute(self, x: NormalWord, y: NormalWord) -> bool:
        return not any(self.comm(x, y))

    def zlog(self, x: NormalWord) -> int:
        """e with x = z^e; x must lie in gamma_5."""
        return self.s.require_log(x, self.z, self.trivial, "expected a power of [b,a,a,a,b]")

    def split_gamma4(self, x: NormalWord) -> Tuple[int, int]:
        """(c, d) with x = g^c z^d for x in gamma_4."""
        c = self.s.require_log(x, self.g, self.s.gamma(5), "expected a power of [b,a,a,a] modulo gamma_5")
        return c, self.zlog(multiply(self.pcp, x, power(self.pcp, self.g, -c)))

    def scale(self, u: NormalWord, c: int) -> NormalWord:
        """u^(1/c), so that a commutator u contributes with exponent 1."""
        return power(self.pcp, u, pow(c, -1, self.pcp.p))

    def times(self, *words: NormalWord) -> NormalWord:
        return self.s.product_of(*words)

    def chain(self, us: List[NormalWord]) -> Tuple[List[NormalWord], int]:
        """
        Reorders and rewrites us so that [u_{i+1}, u_i] = z for i < k,
        u_{k+1}, ... commute with u_k, and u_j commutes with u_i for j >= i + 2.
        Returns the list and k (at least 1 when us is nonempty).
        """
        us = list(us)
        m = 0
        while True:
            partner = next((i for i in range(m + 1, len(us)) if not self.commute(us[i], us[m])), None)
            if partner is None:
                return us, m + 1
            us[m + 1], us[partner] = us[partner], us[m + 1]
            us[m + 1] = self.scale(us[m + 1], self.zlog(self.comm(us[m + 1], us[m])))
            for i in range(m + 2, len(us)):
                beta = self.zlog(self.comm(us[i], us[m]))
                if beta:
                    us[i] = self.times(us[i], power(self.pcp, us[m + 1], -beta))
            m += 1
            logger.debug("commutator chain grew to length %d", m + 1)


def _centralise_a(rw: _Rewriter, us: List[NormalWord]) -> Tuple[NormalWord, List[NormalWord], bool]:
    """
    Returns (a, us, all_central). With all_central every u_i centralises the
    new a; otherwise u_2, ... centralise both a and u_1.
    """
    a = rw.a
    first = next((i for i, u in enumerate(us) if not rw.commute(u, a)), None)
    if first is None:
        return a, us, True
    us = list(us)
    us[0], us[first] = us[first], us[0]
    us[0] = rw.scale(us[0], rw.zlog(rw.comm(us[0], a)))
    for i in range(1, len(us)):
        alpha = rw.zlog(rw.comm(us[i], a))
        if alpha:
            us[i] = rw.times(us[i], power(rw.pcp, us[0], -alpha))
    us, k = rw.chain(us)
    if k % 2 == 0:
        a = rw.times(a, *us[1:k:2])
        logger.debug("chain length %d is even, absorbed into a", k)
        return a, us, True
    us[0] = rw.times(*us[0:k:2])
    logger.debug("chain length %d is odd, absorbed into u_1", k)
    return a, us, False


def _split_off_b(rw: _Rewriter, us: List[NormalWord]) -> Tuple[List[NormalWord], List[NormalWord]]:
    """
    For u_i all centralising a: returns the extra generators of H and the
    generators of U.
    """
    if not us:
        return [], []
    pcp, g = rw.pcp, rw.g
    parts = [rw.split_gamma4(rw.comm(u, rw.b)) for u in us]
    if all(c == 0 for c, _ in parts):
        return [], [rw.times(u, power(pcp, g, -d)) for u, (_, d) in zip(us, parts)]

    us = list(us)
    first = next(i for i, (c, _) in enumerate(parts) if c)
    us[0], us[first] = us[first], us[0]
    us[0] = rw.scale(us[0], rw.split_gamma4(rw.comm(us[0], rw.b))[0])
    _, gamma = rw.split_gamma4(rw.comm(us[0], rw.b))
    us[0] = rw.times(us[0], power(pcp, g, -gamma))
    for i in range(1, len(us)):
        c, _ = rw.split_gamma4(rw.comm(us[i], rw.b))
        if c:
            us[i] = rw.times(us[i], power(pcp, us[0], -c))
        _, delta = rw.split_gamma4(rw.comm(us[i], rw.b))
        if delta:
            us[i] = rw.times(us[i], power(pcp, g, -delta))

    us, k = rw.chain(us)
    if k % 2 == 0:
        extra = [rw.times(*us[0:k:2]), rw.times(*us[1:k:2])]
        return extra, us[1:k - 1] + us[k:]
    return [rw.times(*us[0:k:2])], us[1:]


def central_decomposition(pcp: PcPresentation) -> Decomposition:
    s = structure(pcp)
    gens = normalize_generating_set(pcp)
    return decompose_from(s, gens)


def decompose_from(s: GroupStructure, gens: NormalizedGenerators) -> Decomposition:
    pcp = s.pcp
    rw = _Rewriter(s, gens.a, gens.b)
    a, us, all_central = _centralise_a(rw, list(gens.us))
    rw = _Rewriter(s, a, gens.b)
    if all_central:
        extra, u_gens = _split_off_b(rw, us)
        h_gens = [a, gens.b, *extra]
    else:
        extra, u_gens = _split_off_b(rw, us[1:])
        h_gens = [a, gens.b, *extra, us[0]]
    u_gens = list(u_gens) + list(s.center.gens)

    checks = check_decomposition(pcp, h_gens, u_gens)
    if not checks.passed:
        failed = ", ".join(item.name for item in checks.failures())
        raise StructureContradiction(f"constructed decomposition fails: {failed}")
    decomposition = Decomposition(
        h=induced_sequence(pcp, h_gens),
        u=induced_sequence(pcp, u_gens),
        h_generators=tuple(h_gens),
        u_generators=tuple(u_gens),
        checks=checks,
    )
    logger.info("decomposition: H on %d generators, |U| = %d", len(h_gens), decomposition.u.order)
    return decomposition


def check_decomposition(pcp: PcPresentation, h_gens: Sequence[NormalWord], u_gens: Sequence[NormalWord]) -> Checklist:
    """The central-product postconditions for H = <h_gens>, U = <u_gens>."""
    s = structure(pcp)
    h = induced_sequence(pcp, h_gens)
    u = induced_sequence(pcp, u_gens)
    out = Checklist(title="central decomposition")
    rank = frattini_rank(pcp, h)
    out.add(f"H needs at most {MAX_H_GENERATORS} generators", rank <= MAX_H_GENERATORS, str(rank))
    h_lcs = lower_central_series(pcp, h)
    same = all(
        same_subgroup(h_lcs[i - 1] if i - 1 < len(h_lcs) else trivial_subgroup(pcp), s.gamma(i))
        for i in range(2, max(len(h_lcs), len(s.lcs)) + 1)
    )
    out.add("gamma_i(H) = gamma_i(G) for i >= 2", same)
    out.add("U' <= gamma_5", is_subgroup(derived_subgroup(pcp, u), s.gamma(5)))
    out.add("[H, U] = 1", all(not any(commutator(pcp, x, y)) for x in h.gens for y in u.gens))
    out.add("H normal", is_normal(pcp, h))
    out.add("U normal", is_normal(pcp, u))
    hu = subgroup_product(h, u)
    out.add("G = HU", hu.length == pcp.n, f"|HU| = {pcp.p}^{hu.length}")
    try:
        meet = intersection(h, u)
        out.add("|H||U|/|H ∩ U| = |G|", h.length + u.length - meet.length == pcp.n, f"|H ∩ U| = {pcp.p}^{meet.length}")
    except EnumerationCapError as e:
        logger.warning("order formula skipped: %s", e)
        out.skipped("|H||U|/|H ∩ U| = |G|", str(e))
    return out


def check_h_candidate(pcp: PcPresentation, h_gens: Sequence[NormalWord]) -> Checklist:
    """check_decomposition with the largest admissible U = C_G(H)."""
    return check_decomposition(pcp, h_gens, centralizer(pcp, h_gens).gens)


def _subspace_generators(s: GroupStructure, dim: int):
    """Every dim-dimensional subspace of G/Phi(G), as basis elements lifted to G."""
    d, p = s.frattini_quotient.rank, s.p
    basis = s.frattini_quotient.basis()
    for pivots in itertools.combinations(range(d), dim):
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
        for values in itertools.product(range(p), repeat=len(free)):
            rows = [[0] * d for _ in range(dim)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield [s.product_of(*(power(s.pcp, g, e) for g, e in zip(basis, row) if e)) for row in rows]


def minimality_report(pcp: PcPresentation, gens: NormalizedGenerators, long: bool = False) -> Checklist:
    """
    No H on fewer than five generators works: every 4-subset of the
    normalized generating set fails a postcondition. With long, every
    4-dimensional subspace of G/Phi(G) is tried as well.
    """
    s = structure(pcp)
    names = ["a", "b"] + [f"u{i}" for i in range(1, len(gens.us) + 1)]
    out = Checklist(title="minimality of the H generator count")
    if len(gens.all) < MAX_H_GENERATORS:
        out.not_applicable("4-subsets fail", f"only {len(gens.all)} generators")
        return out
    for subset in itertools.combinations(range(len(gens.all)), MAX_H_GENERATORS - 1):
        candidate = check_h_candidate(pcp, [gens.all[i] for i in subset])
        label = ",".join(names[i] for i in subset)
        broken = ", ".join(item.name for item in candidate.failures())
        out.add(f"H = <{label}> inadmissible", not candidate.passed, broken)
    if long:
        tried = 0
        admissible = []
        for words in _subspace_generators(s, MAX_H_GENERATORS - 1):
            tried += 1
            if check_h_candidate(pcp, words).passed:
                admissible.append(", ".join(pcp.format_word(w) for w in words))
        out.add(
            "every 4-dimensional subspace inadmissible",
            not admissible,
            admissible[0] if admissible else f"{tried} subspaces tried",
        )
    return out


def check_factorizations(pcp: PcPresentation, factorizations: Sequence[Tuple[Sequence[NormalWord], Sequence[NormalWord]]]) -> List[Checklist]:
    return [check_decomposition(pcp, h, u) for h, u in factorizations]
