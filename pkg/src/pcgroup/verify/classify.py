""" Isomorphism type of G', power-centrality, and invariant-based comparison of subgroups. """
from __future__ import annotations

import logging
from typing import Callable, List, Literal, Tuple

from pcgroup.errors import EnumerationCapError, StructureContradiction
from pcgroup.pcp.presentation import PcPresentation
from pcgroup.subgroups.centralizer import subgroup_center
from pcgroup.subgroups.induced import InducedSequence, is_subgroup
from pcgroup.subgroups.invariants import (
    abelian_invariants,
    abelianization_invariants,
    agemo,
    element_order_histogram,
    exponent,
    is_abelian,
    is_elementary_abelian_section,
)
from pcgroup.verify.hypotheses import require_hypotheses
from pcgroup.verify.report import Checklist, InvariantComparison
from pcgroup.verify.structure import structure

logger = logging.getLogger(__name__)

DerivedType = Literal["X-type", "Y-type"]


def derived_structure_checks(pcp: PcPresentation) -> Checklist:
    require_hypotheses(pcp)
    s = structure(pcp)
    p = pcp.p
    d1, d2 = s.derived_term(1), s.derived_term(2)
    out = Checklist(title="structure of G'")
    out.add("|G'| = p^4", d1.length == 4, f"{p}^{d1.length}")
    out.add("G' nonabelian", not is_abelian(pcp, d1))
    out.add("|G''| = p", d2.length == 1, f"{p}^{d2.length}")
    out.add("G'/G'' elementary abelian of rank 3", d1.length - d2.length == 3 and is_elementary_abelian_section(pcp, d1, d2))
    center_invariants = abelian_invariants(pcp, subgroup_center(pcp, d1))
    out.add("Z(G') = C_p x C_p", center_invariants == [p, p], str(center_invariants))
    return out


def classify_derived_subgroup(pcp: PcPresentation) -> DerivedType:
    """X-type when G' (= X_{p^3} x C_p) has exponent p, Y-type when it has exponent p^2."""
    checks = derived_structure_checks(pcp)
    if not checks.passed:
        failed = ", ".join(item.name for item in checks.failures())
        raise StructureContradiction(f"unexpected isomorphism type of G': {failed}")
    e = exponent(pcp, structure(pcp).derived_term(1))
    if e == pcp.p:
        kind: DerivedType = "X-type"
    elif e == pcp.p ** 2:
        kind = "Y-type"
    else:
        raise StructureContradiction(f"unexpected isomorphism type of G': exponent {e}")
    logger.info("G' of %r is %s", pcp, kind)
    return kind


def verify_power_central(pcp: PcPresentation) -> Checklist:
    """G^p <= Z(G) for X-type and p >= 5; G^(p^2) <= Z(G) for Y-type."""
    kind = classify_derived_subgroup(pcp)
    p = pcp.p
    out = Checklist(title="power subgroup is central")
    if kind == "X-type":
        k, applicable = 1, p >= 5
    else:
        k, applicable = 2, p >= 3
    name = f"G^{p ** k} <= Z(G)"
    if not applicable:
        out.not_applicable(name, f"{kind} needs p >= {5 if kind == 'X-type' else 3}")
        return out
    powers = agemo(pcp, k)
    out.add(name, is_subgroup(powers, structure(pcp).center), f"|G^{p ** k}| = {powers.order}")
    return out


def compare_invariants(pcp: PcPresentation, left: InducedSequence, right: InducedSequence,
                       names: Tuple[str, str] = ("H1", "H2")) -> InvariantComparison:
    """
    Compares order, abelianization invariants, element-order histogram and
    centre invariants, stopping at the first one that differs.
    """
    invariants: List[Tuple[str, Callable[[InducedSequence], object]]] = [
        ("order", lambda h: h.order),
        ("abelianization invariants", lambda h: abelianization_invariants(pcp, h)),
        ("element-order histogram", lambda h: element_order_histogram(pcp, h)),
        ("centre invariants", lambda h: abelian_invariants(pcp, subgroup_center(pcp, h))),
    ]
    result = InvariantComparison(left=names[0], right=names[1])
    for label, invariant in invariants:
        try:
            values = (invariant(left), invariant(right))
        except EnumerationCapError as e:
            logger.warning("%s skipped: %s", label, e)
            continue
        result.values[label] = [str(v) for v in values]
        if values[0] != values[1]:
            result.distinguished_by = label
            break
    logger.info("%s vs %s: %s", names[0], names[1], result.verdict)
    return result
