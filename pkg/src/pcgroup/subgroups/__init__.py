from pcgroup.subgroups.centralizer import center, center_modulo, centralizer, subgroup_center
from pcgroup.subgroups.induced import (
    InducedSequence,
    SiftResult,
    canonical,
    commutator_subgroup,
    contains,
    elements,
    induced_sequence,
    intersection,
    is_normal,
    is_subgroup,
    normal_closure,
    same_subgroup,
    sift,
    subgroup_product,
    transversal,
    trivial_subgroup,
    whole_group,
)
from pcgroup.subgroups.invariants import (
    abelian_invariants,
    abelianization_invariants,
    agemo,
    element_order_histogram,
    exponent,
    is_abelian,
    is_elementary_abelian_section,
    omega_count,
)
from pcgroup.subgroups.series import (
    FrattiniQuotient,
    derived_series,
    derived_subgroup,
    exponent_p_central_series,
    exponent_p_class,
    frattini,
    frattini_rank,
    lower_central_series,
    minimal_generators,
    nilpotency_class,
    upper_central_series,
)

__all__ = [
    "FrattiniQuotient",
    "InducedSequence",
    "SiftResult",
    "abelian_invariants",
    "abelianization_invariants",
    "agemo",
    "canonical",
    "center",
    "center_modulo",
    "centralizer",
    "commutator_subgroup",
    "contains",
    "derived_series",
    "derived_subgroup",
    "element_order_histogram",
    "elements",
    "exponent",
    "exponent_p_central_series",
    "exponent_p_class",
    "frattini",
    "frattini_rank",
    "induced_sequence",
    "intersection",
    "is_abelian",
    "is_elementary_abelian_section",
    "is_normal",
    "is_subgroup",
    "lower_central_series",
    "minimal_generators",
    "nilpotency_class",
    "normal_closure",
    "omega_count",
    "same_subgroup",
    "sift",
    "subgroup_center",
    "subgroup_product",
    "transversal",
    "trivial_subgroup",
    "upper_central_series",
    "whole_group",
]
