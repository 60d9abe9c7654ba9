""" Element-order statistics and abelian invariants of subgroups. """
from __future__ import annotations

import logging
from collections import Counter
from typing import Dict, List, Optional

from pcgroup.errors import NotAbelianError, NotContainedError, PresentationError
from pcgroup.pcp.collector import commutator, element_order, power
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.induced import (
    InducedSequence,
    _close,
    elements,
    is_normal,
    is_subgroup,
    transversal,
    whole_group,
)
from pcgroup.subgroups.series import derived_subgroup, lower_central_series, upper_central_series

logger = logging.getLogger(__name__)


def _top(pcp: PcPresentation, sub: Optional[InducedSequence]) -> InducedSequence:
    return sub if sub is not None else whole_group(pcp)


def element_order_histogram(pcp: PcPresentation, sub: Optional[InducedSequence] = None) -> Dict[int, int]:
    """{order: number of elements of that order}; enumerates, so capped."""
    counts = Counter(element_order(pcp, x) for x in elements(_top(pcp, sub)))
    return dict(sorted(counts.items()))


def exponent(pcp: PcPresentation, sub: Optional[InducedSequence] = None) -> int:
    return max(element_order_histogram(pcp, sub))


def is_abelian(pcp: PcPresentation, sub: Optional[InducedSequence] = None) -> bool:
    gens = _top(pcp, sub).gens
    return all(not any(commutator(pcp, x, y)) for i, x in enumerate(gens) for y in gens[:i])


def _invariants_from_power_logs(p: int, logs: List[int]) -> List[int]:
    # logs[k] = log_p |A^(p^k)| = sum(max(e - k, 0)) over the cyclic factors p^e
    invariants: List[int] = []
    at_least = [logs[k] - logs[k + 1] for k in range(len(logs) - 1)] + [0]
    for k in range(len(at_least) - 1):
        invariants += [p ** (k + 1)] * (at_least[k] - at_least[k + 1])
    return sorted(invariants, reverse=True)


def _power_logs(pcp: PcPresentation, gens: List[NormalWord], base: InducedSequence) -> List[int]:
    logs = []
    k = 0
    while True:
        sub = _close(pcp, [power(pcp, g, pcp.p ** k) for g in gens] + list(base.gens))
        logs.append(sub.length - base.length)
        if sub.length == base.length:
            return logs
        k += 1


def abelian_invariants(pcp: PcPresentation, sub: Optional[InducedSequence] = None) -> List[int]:
    """Orders of the cyclic factors of an abelian subgroup, largest first."""
    top = _top(pcp, sub)
    if not is_abelian(pcp, top):
        raise NotAbelianError(f"subgroup of order {top.order} is not abelian")
    return _invariants_from_power_logs(pcp.p, _power_logs(pcp, list(top.gens), _close(pcp, ())))


def abelianization_invariants(pcp: PcPresentation, sub: Optional[InducedSequence] = None) -> List[int]:
    """Abelian invariants of H / H'."""
    top = _top(pcp, sub)
    return _invariants_from_power_logs(pcp.p, _power_logs(pcp, list(top.gens), derived_subgroup(pcp, top)))


def _power_base(pcp: PcPresentation, top: InducedSequence) -> InducedSequence:
    """
    Normal subgroup N of top, of class below p, such that every commutator of
    weight p or more in t and n is trivial for t in top and n in N:
    Z_{p-1}(G) for the whole group, gamma_{c-p+2}(H) for a subgroup H of class c.
    """
    p = pcp.p
    if top.length == pcp.n:
        upper = upper_central_series(pcp)
        return upper[min(p - 1, len(upper) - 1)]
    lower = lower_central_series(pcp, top)
    return lower[max(0, len(lower) - p)]


def agemo(pcp: PcPresentation, k: int = 1, sub: Optional[InducedSequence] = None) -> InducedSequence:
    """
    Subgroup generated by all p^k-th powers of elements of sub (default G).

    For t in top, n in the base N and q = p^k, (tn)^q = t^q n^q c with c a
    product of powers c_i^binom(q, i), c_i in gamma_i(<t, n>) <= N. Terms with
    i >= p are trivial and q divides binom(q, i) for i < p, so c lies in the
    agemo of N and the powers of a transversal of N suffice. N is regular,
    so its own agemo is the normal closure of the q-th powers of its
    generators.
    """
    if k < 0:
        raise PresentationError(f"agemo index must be non-negative, got {k}")
    top = _top(pcp, sub)
    if k == 0 or top.is_trivial():
        return top
    q = pcp.p ** k
    base = _power_base(pcp, top)
    regular = _close(pcp, [power(pcp, g, q) for g in base.gens], base.gens)
    powers = [power(pcp, t, q) for t in transversal(top, base)]
    logger.debug("agemo_%d: %d coset powers over a base of order %d", k, len(powers), base.order)
    return _close(pcp, powers + list(regular.gens))


def omega_count(pcp: PcPresentation, k: int = 1, sub: Optional[InducedSequence] = None) -> int:
    """Number of elements with x^(p^k) = 1."""
    bound = pcp.p ** k
    return sum(n for order, n in element_order_histogram(pcp, sub).items() if order <= bound)


def is_elementary_abelian_section(pcp: PcPresentation, upper: InducedSequence, lower: InducedSequence) -> bool:
    """Whether upper / lower is elementary abelian; lower must be normal in upper."""
    if not is_subgroup(lower, upper):
        raise NotContainedError("lower subgroup is not contained in the upper one")
    if not is_normal(pcp, lower, upper):
        raise NotContainedError("lower subgroup is not normal in the upper one")
    gens = upper.gens
    return all(power(pcp, x, pcp.p) in lower for x in gens) and all(
        commutator(pcp, x, y) in lower for i, x in enumerate(gens) for y in gens[:i]
    )
