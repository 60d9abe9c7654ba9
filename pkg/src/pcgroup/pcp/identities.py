""" Commutator identities, evaluated pointwise as collector self-checks. """
from __future__ import annotations

from typing import Tuple

from pcgroup.pcp.collector import commutator, conjugate, invert, multiply, power, product
from pcgroup.pcp.presentation import NormalWord, PcPresentation
from pcgroup.subgroups.induced import InducedSequence, induced_sequence, subgroup_product, trivial_subgroup
from pcgroup.subgroups.invariants import agemo
from pcgroup.subgroups.series import derived_subgroup, lower_central_series


def hall_witt_residual(pcp: PcPresentation, x: NormalWord, y: NormalWord, z: NormalWord) -> NormalWord:
    """[x, y, z^x] [z, x, y^z] [y, z, x^y]; the identity in every group."""
    return product(
        pcp,
        commutator(pcp, x, y, conjugate(pcp, z, x)),
        commutator(pcp, z, x, conjugate(pcp, y, z)),
        commutator(pcp, y, z, conjugate(pcp, x, y)),
    )


def hall_witt_residual_expanded(pcp: PcPresentation, x: NormalWord, y: NormalWord, z: NormalWord) -> NormalWord:
    """[x, y, z[z, x]] [z, x, y[y, z]] [y, z, x[x, y]], the same identity with u^v = u[u, v]."""
    return product(
        pcp,
        commutator(pcp, x, y, multiply(pcp, z, commutator(pcp, z, x))),
        commutator(pcp, z, x, multiply(pcp, y, commutator(pcp, y, z))),
        commutator(pcp, y, z, multiply(pcp, x, commutator(pcp, x, y))),
    )


def collection_formula_residual(
    pcp: PcPresentation, x: NormalWord, y: NormalWord
) -> Tuple[NormalWord, InducedSequence]:
    """
    Returns [x^p, y] ([x, y]^p)^-1 together with (N')^p gamma_p(N) for
    N = <x, [x, y]>. The residual always lies in that subgroup.
    """
    p = pcp.p
    xy = commutator(pcp, x, y)
    residual = multiply(pcp, commutator(pcp, power(pcp, x, p), y), invert(pcp, power(pcp, xy, p)))

    n = induced_sequence(pcp, [x, xy])
    series = lower_central_series(pcp, n)
    gamma_p = series[p - 1] if len(series) >= p else trivial_subgroup(pcp)
    bound = subgroup_product(agemo(pcp, 1, derived_subgroup(pcp, n)), gamma_p)
    return residual, bound
