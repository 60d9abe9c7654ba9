from pcgroup.pcp.collector import (
    collect,
    commutator,
    conjugate,
    element_order,
    enumerate_elements,
    evaluate,
    invert,
    multiply,
    power,
    product,
)
from pcgroup.pcp.consistency import Violation, consistency_violations, is_consistent
from pcgroup.pcp.presentation import NormalWord, PcPresentation, build, elementary_abelian
from pcgroup.pcp.words import FreeWord, comm, gen

__all__ = [
    "FreeWord",
    "NormalWord",
    "PcPresentation",
    "Violation",
    "build",
    "collect",
    "comm",
    "commutator",
    "conjugate",
    "consistency_violations",
    "element_order",
    "elementary_abelian",
    "enumerate_elements",
    "evaluate",
    "gen",
    "invert",
    "is_consistent",
    "multiply",
    "power",
    "product",
]
