"""
Induced generating sequences: subgroup generators with strictly increasing
depths and leading exponent 1. Membership is decided by sifting.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from pcgroup.configuration.config_loader import load_config
from pcgroup.errors import EnumerationCapError
from pcgroup.pcp.collector import commutator, depth, invert, multiply, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SiftResult:
    member: bool
    # exponent of each sequence member (by position in the sequence), valid when member
    witness: Tuple[int, ...]
    residual: NormalWord


@dataclass(frozen=True, eq=False)
class InducedSequence:
    pcp: PcPresentation
    gens: Tuple[NormalWord, ...]

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(depth(g) for g in self.gens)

    @property
    def length(self) -> int:
        return len(self.gens)

    @property
    def order(self) -> int:
        return self.pcp.p ** len(self.gens)

    def is_trivial(self) -> bool:
        return not self.gens

    def __contains__(self, x: NormalWord) -> bool:
        return sift(self, x).member

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, InducedSequence):
            return NotImplemented
        return same_subgroup(self, other)

    def __hash__(self) -> int:
        return hash(canonical(self).gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __repr__(self) -> str:
        words = ", ".join(self.pcp.format_word(g) for g in self.gens)
        return f"InducedSequence(order={self.pcp.p}^{len(self.gens)}, gens=[{words}])"


def _table(seq: InducedSequence) -> Dict[int, NormalWord]:
    return {depth(g): g for g in seq.gens}


def _sift(pcp: PcPresentation, table: Dict[int, NormalWord], x: NormalWord) -> Tuple[NormalWord, Dict[int, int]]:
    witness: Dict[int, int] = {}
    while any(x):
        d = depth(x)
        g = table.get(d)
        if g is None:
            break
        c = x[d]
        witness[d] = c
        x = multiply(pcp, invert(pcp, power(pcp, g, c)), x)
    return x, witness


def sift(seq: InducedSequence, x: NormalWord) -> SiftResult:
    """x = g_1^w_1 ... g_k^w_k when x lies in the subgroup."""
    residual, by_depth = _sift(seq.pcp, _table(seq), x)
    witness = tuple(by_depth.get(d, 0) for d in seq.pivots)
    return SiftResult(not any(residual), witness, residual)


def contains(seq: InducedSequence, x: NormalWord) -> SiftResult:
    return sift(seq, x)


def _insert(pcp: PcPresentation, table: Dict[int, NormalWord], x: NormalWord) -> Optional[NormalWord]:
    residual, _ = _sift(pcp, table, x)
    if not any(residual):
        return None
    d = depth(residual)
    lead = residual[d]
    if lead != 1:
        residual = power(pcp, residual, pow(lead, -1, pcp.p))
    table[d] = residual
    return residual


def _close(
    pcp: PcPresentation,
    gens: Iterable[NormalWord],
    under: Sequence[NormalWord] = (),
    table: Optional[Dict[int, NormalWord]] = None,
) -> InducedSequence:
    """Sift-and-add closure of gens; with `under`, also closed under conjugation by it."""
    table = dict(table or {})
    queue: List[NormalWord] = [g for g in gens if any(g)]
    while queue:
        new = _insert(pcp, table, queue.pop())
        if new is None:
            continue
        queue.append(power(pcp, new, pcp.p))
        for g in list(table.values()):
            if g is not new:
                queue.append(commutator(pcp, new, g))
        for u in under:
            queue.append(commutator(pcp, new, u))
    return InducedSequence(pcp, tuple(table[d] for d in sorted(table)))


def induced_sequence(pcp: PcPresentation, gens: Iterable[NormalWord]) -> InducedSequence:
    """The subgroup generated by gens."""
    return _close(pcp, gens)


def whole_group(pcp: PcPresentation) -> InducedSequence:
    return InducedSequence(pcp, tuple(pcp.generators()))


def trivial_subgroup(pcp: PcPresentation) -> InducedSequence:
    return InducedSequence(pcp, ())


def normal_closure(pcp: PcPresentation, gens: Iterable[NormalWord], under: Sequence[NormalWord]) -> InducedSequence:
    """Smallest subgroup containing gens and normalised by every element of `under`."""
    return _close(pcp, gens, under)


def subgroup_product(a: InducedSequence, *others: InducedSequence) -> InducedSequence:
    """Subgroup generated by the union (the product when one factor normalises the other)."""
    gens = list(a.gens)
    for o in others:
        gens.extend(o.gens)
    return _close(a.pcp, gens)


def commutator_subgroup(pcp: PcPresentation, a: InducedSequence, b: InducedSequence) -> InducedSequence:
    """[A, B]: normal closure in <A, B> of the commutators of generators."""
    gens = [commutator(pcp, x, y) for x in a.gens for y in b.gens]
    return _close(pcp, gens, a.gens + b.gens)


def is_subgroup(small: InducedSequence, big: InducedSequence) -> bool:
    return all(g in big for g in small.gens)


def is_normal(pcp: PcPresentation, sub: InducedSequence, ambient: Optional[InducedSequence] = None) -> bool:
    ambient_gens = ambient.gens if ambient is not None else tuple(pcp.generators())
    return all(commutator(pcp, h, g) in sub for h in sub.gens for g in ambient_gens)


def canonical(seq: InducedSequence) -> InducedSequence:
    """Unique sequence for the subgroup: zero exponent at every other member's pivot."""
    pcp = seq.pcp
    gens = list(seq.gens)
    pivots = [depth(g) for g in gens]
    for m in range(len(gens) - 1, -1, -1):
        g = gens[m]
        for h, d in zip(gens[m + 1:], pivots[m + 1:]):
            c = g[d]
            if c:
                g = multiply(pcp, g, power(pcp, h, -c))
        gens[m] = g
    return InducedSequence(pcp, tuple(gens))


def same_subgroup(a: InducedSequence, b: InducedSequence) -> bool:
    if a.length != b.length or a.pcp is not b.pcp and a.pcp != b.pcp:
        return False
    return canonical(a).gens == canonical(b).gens


def _products(pcp: PcPresentation, gens: Sequence[NormalWord]) -> Iterator[NormalWord]:
    def walk(i: int, prefix: NormalWord) -> Iterator[NormalWord]:
        if i == len(gens):
            yield prefix
            return
        current = prefix
        for _ in range(pcp.p):
            yield from walk(i + 1, current)
            current = multiply(pcp, current, gens[i])

    yield from walk(0, pcp.identity())


def elements(seq: InducedSequence, cap: Optional[int] = None) -> Iterator[NormalWord]:
    """Every element g_1^x_1 ... g_k^x_k of the subgroup."""
    cap = cap if cap is not None else load_config().limits.max_enumeration_order
    if seq.order > cap:
        raise EnumerationCapError(f"refusing to enumerate {seq.order} elements (cap {cap})")
    yield from _products(seq.pcp, seq.gens)


def transversal(upper: InducedSequence, lower: InducedSequence) -> Iterator[NormalWord]:
    """
    Left coset representatives of lower in upper (lower a subgroup of upper):
    the products of the members of upper whose depth is not a pivot of lower.
    """
    skip = set(lower.pivots)
    yield from _products(upper.pcp, [g for g in upper.gens if depth(g) not in skip])


Pair = Tuple[NormalWord, NormalWord]


def _intersect_normalised(a: InducedSequence, b: InducedSequence) -> InducedSequence:
    """
    A ∩ B when A normalises B. The pairs (y, 1) for y in B and (x, x) for x
    in A generate {(xy, x)} in G x G, whose members with trivial first entry
    are the (1, x) with x in A ∩ B. Depths in G x G run over the first entry,
    then the second.
    """
    pcp = a.pcp
    n, p = pcp.n, pcp.p

    def key(u: Pair) -> int:
        return depth(u[0]) if any(u[0]) else n + depth(u[1])

    def lead(u: Pair, d: int) -> int:
        return u[0][d] if d < n else u[1][d - n]

    def mul(u: Pair, v: Pair) -> Pair:
        return multiply(pcp, u[0], v[0]), multiply(pcp, u[1], v[1])

    def pw(u: Pair, e: int) -> Pair:
        return power(pcp, u[0], e), power(pcp, u[1], e)

    def comm(u: Pair, v: Pair) -> Pair:
        return commutator(pcp, u[0], v[0]), commutator(pcp, u[1], v[1])

    table: Dict[int, Pair] = {}

    def insert(u: Pair) -> Optional[Pair]:
        while True:
            d = key(u)
            if d == 2 * n:
                return None
            c = lead(u, d)
            current = table.get(d)
            if current is None:
                if c != 1:
                    u = pw(u, pow(c, -1, p))
                table[d] = u
                return u
            u = mul(pw(current, -c), u)

    one = pcp.identity()
    queue: List[Pair] = [(y, one) for y in b.gens] + [(x, x) for x in a.gens]
    while queue:
        new = insert(queue.pop())
        if new is None:
            continue
        queue.append(pw(new, p))
        for other in list(table.values()):
            if other is not new:
                queue.append(comm(new, other))
    meet = [u[1] for d, u in table.items() if d >= n]
    logger.debug("intersection through G x G: %d of %d pairs in the second factor", len(meet), len(table))
    return _close(pcp, meet)


def intersection(a: InducedSequence, b: InducedSequence) -> InducedSequence:
    """
    A ∩ B. Linear in the pc sequence when one factor normalises the other,
    otherwise by enumerating the smaller subgroup (capped like `elements`).
    """
    small, big = (a, b) if a.length <= b.length else (b, a)
    if is_subgroup(small, big):
        return small
    pcp = a.pcp
    if is_normal(pcp, b, a):
        return _intersect_normalised(a, b)
    if is_normal(pcp, a, b):
        return _intersect_normalised(b, a)
    return _close(pcp, [x for x in elements(small) if x in big])
