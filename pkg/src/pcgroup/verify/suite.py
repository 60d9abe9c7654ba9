""" Named check groups, as run by `pcgroup check` and `corpus-verify`. """
from __future__ import annotations

import logging
from typing import Callable, Dict, List

from pcgroup.errors import PresentationError, ReductionError
from pcgroup.pcp.presentation import PcPresentation
from pcgroup.verify.classify import classify_derived_subgroup, derived_structure_checks, verify_power_central
from pcgroup.verify.decomposition import central_decomposition
from pcgroup.verify.hypotheses import require_hypotheses
from pcgroup.verify.reduction import reduce_generators
from pcgroup.verify.report import Checklist
from pcgroup.verify.theorems import (
    verify_burnside_lemma,
    verify_chain,
    verify_elementary_derived_quotient,
    verify_hall_bounds,
    verify_theorem_1,
    verify_transfer_lemma,
)

logger = logging.getLogger(__name__)


def _transfer(pcp: PcPresentation) -> List[Checklist]:
    try:
        h = reduce_generators(pcp)
    except ReductionError as e:
        out = Checklist(title="lower central series transfer")
        out.not_applicable("reduced generating set", str(e))
        return [out]
    return [verify_transfer_lemma(pcp, h.gens)]


def _classify(pcp: PcPresentation) -> List[Checklist]:
    checks = derived_structure_checks(pcp)
    if checks.passed:
        checks.add("isomorphism type of G'", True, classify_derived_subgroup(pcp))
    return [checks]


def _decomposition(pcp: PcPresentation) -> List[Checklist]:
    return [central_decomposition(pcp).checks]


CHECKS: Dict[str, Callable[[PcPresentation], List[Checklist]]] = {
    "theorem1": lambda pcp: [verify_theorem_1(pcp)],
    "hall": lambda pcp: [verify_hall_bounds(pcp)],
    "transfer": _transfer,
    "classify": _classify,
    "power-central": lambda pcp: [verify_power_central(pcp)],
}

# run by "all" after the named groups above
EXTRA_CHECKS: List[Callable[[PcPresentation], List[Checklist]]] = [
    lambda pcp: [verify_chain(pcp)],
    lambda pcp: [verify_elementary_derived_quotient(pcp)],
    lambda pcp: [verify_burnside_lemma(pcp)],
    _decomposition,
]


def check_names() -> List[str]:
    return [*CHECKS, "all"]


def run_checks(pcp: PcPresentation, name: str) -> List[Checklist]:
    """
    Runs one named check group, or every group for "all". Theorem checks
    raise HypothesisError outside the hypotheses, including p = 2.
    """
    if name == "all":
        require_hypotheses(pcp)
        runners = list(CHECKS.values()) + EXTRA_CHECKS
    elif name in CHECKS:
        runners = [CHECKS[name]]
    else:
        raise PresentationError(f"unknown check {name!r}; expected one of {', '.join(check_names())}")
    results: List[Checklist] = []
    for runner in runners:
        results += runner(pcp)
    logger.info("%s on %r: %d checklists, %s", name, pcp, len(results),
                "pass" if all(c.passed for c in results) else "FAIL")
    return results
