from pcgroup.verify.classify import classify_derived_subgroup, compare_invariants, derived_structure_checks, verify_power_central
from pcgroup.verify.decomposition import (
    Decomposition,
    central_decomposition,
    check_decomposition,
    check_factorizations,
    check_h_candidate,
    minimality_report,
)
from pcgroup.verify.fuzz import FuzzResult, run_fuzz
from pcgroup.verify.hypotheses import hypothesis_check, require_hypotheses
from pcgroup.verify.normalize import NormalizedGenerators, normalize_generating_set
from pcgroup.verify.reduction import is_standard_pair, reduce_generators, standard_pair
from pcgroup.verify.report import Checklist, HypothesisReport, InvariantComparison, SubgroupReport
from pcgroup.verify.structure import GroupStructure, structure
from pcgroup.verify.theorems import (
    verify_burnside_lemma,
    verify_chain,
    verify_elementary_derived_quotient,
    verify_hall_bounds,
    verify_theorem_1,
    verify_transfer_lemma,
)

__all__ = [
    "Checklist",
    "Decomposition",
    "FuzzResult",
    "GroupStructure",
    "HypothesisReport",
    "InvariantComparison",
    "NormalizedGenerators",
    "SubgroupReport",
    "central_decomposition",
    "check_decomposition",
    "check_factorizations",
    "check_h_candidate",
    "classify_derived_subgroup",
    "compare_invariants",
    "derived_structure_checks",
    "hypothesis_check",
    "is_standard_pair",
    "minimality_report",
    "normalize_generating_set",
    "reduce_generators",
    "require_hypotheses",
    "run_fuzz",
    "standard_pair",
    "structure",
    "verify_burnside_lemma",
    "verify_chain",
    "verify_elementary_derived_quotient",
    "verify_hall_bounds",
    "verify_power_central",
    "verify_theorem_1",
    "verify_transfer_lemma",
]
