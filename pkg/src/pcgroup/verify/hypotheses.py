from __future__ import annotations

import logging

from pcgroup.errors import HypothesisError
from pcgroup.pcp.presentation import PcPresentation
from pcgroup.verify.report import HypothesisReport
from pcgroup.verify.structure import structure

logger = logging.getLogger(__name__)


def hypothesis_check(pcp: PcPresentation) -> HypothesisReport:
    """p odd, |G'/G''| = p^3 and G'' != 1."""
    s = structure(pcp)
    g1, g2 = s.derived_term(1), s.derived_term(2)
    g3 = s.gamma(3)
    derived_quotient = pcp.p ** (g1.length - g2.length)
    report = HypothesisReport(
        p=pcp.p,
        order=pcp.order,
        derived_quotient_order=derived_quotient,
        second_derived_trivial=g2.is_trivial(),
        lower_quotient_order=pcp.p ** (g1.length - g3.length),
        p_odd=pcp.p % 2 == 1,
        satisfied=pcp.p % 2 == 1 and derived_quotient == pcp.p ** 3 and not g2.is_trivial(),
    )
    logger.debug("hypotheses for %r: %s", pcp, report)
    return report


def require_hypotheses(pcp: PcPresentation) -> HypothesisReport:
    report = hypothesis_check(pcp)
    if not report.p_odd:
        raise HypothesisError("theorem requires p ≥ 3")
    if not report.satisfied:
        raise HypothesisError(
            f"hypotheses fail: |G'/G''| = {report.derived_quotient_order}, "
            f"G'' {'trivial' if report.second_derived_trivial else 'nontrivial'}"
        )
    return report
