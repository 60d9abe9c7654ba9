from __future__ import annotations

import random
from typing import List

import pytest
from hypothesis import strategies as st
from sympy.combinatorics import Permutation
from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from pcgroup.configuration.config_loader import reset_config
from pcgroup.pcp.presentation import NormalWord, PcPresentation, build, elementary_abelian


def x27() -> PcPresentation:
    """Extraspecial of order 27 and exponent 3: [g2, g1] = g3."""
    return build(3, [1, 1, 2], commutators={(2, 1): {3: 1}})


def y125() -> PcPresentation:
    """Extraspecial of order 125 and exponent 25: g1^5 = g3, [g2, g1] = g3."""
    return build(5, [1, 1, 2], powers={1: {3: 1}}, commutators={(2, 1): {3: 1}})


def dihedral8() -> PcPresentation:
    return build(2, [1, 1, 2], powers={1: {3: 1}}, commutators={(2, 1): {3: 1}})


def quaternion8() -> PcPresentation:
    return build(2, [1, 1, 2], powers={1: {3: 1}, 2: {3: 1}}, commutators={(2, 1): {3: 1}})


def maximal_class_81() -> PcPresentation:
    """Order 3^4, class 3: [g2, g1] = g3, [g3, g1] = g4."""
    return build(3, [1, 1, 2, 3], commutators={(2, 1): {3: 1}, (3, 1): {4: 1}})


SMALL_GROUPS = {
    "C3^3": lambda: elementary_abelian(3, 3),
    "X27": x27,
    "Y125": y125,
    "D8": dihedral8,
    "Q8": quaternion8,
    "M81": maximal_class_81,
}


@pytest.fixture(autouse=True)
def _fresh_config(monkeypatch):
    monkeypatch.delenv("PCGROUP_CONFIG", raising=False)
    reset_config()
    yield
    reset_config()


@pytest.fixture(params=sorted(SMALL_GROUPS))
def small_group(request) -> PcPresentation:
    return SMALL_GROUPS[request.param]()


def words(pcp: PcPresentation):
    """Hypothesis strategy for elements of pcp."""
    return st.tuples(*[st.integers(0, pcp.p - 1) for _ in range(pcp.n)])


def random_words(pcp: PcPresentation, count: int, seed: int = 0) -> List[NormalWord]:
    rng = random.Random(seed)
    return [tuple(rng.randrange(pcp.p) for _ in range(pcp.n)) for _ in range(count)]


def _fp_group(pcp: PcPresentation):
    """The power and commutator relations as a sympy FpGroup, with its free generators."""
    free, *gens = free_group(",".join(pcp.names))

    def word(w: NormalWord):
        result = free.identity
        for g, e in zip(gens, w):
            result = result * g ** e
        return result

    relators = []
    for i, g in enumerate(gens):
        relators.append(g ** pcp.p * word(pcp.power_tail(i)) ** -1)
        for j, h in enumerate(gens[:i]):
            relators.append(g ** -1 * h ** -1 * g * h * word(pcp.comm_tail(i, j)) ** -1)
    return FpGroup(free, relators), gens


def sympy_order(pcp: PcPresentation) -> int:
    """Order of the group given by the power and commutator relations, by coset enumeration."""
    return _fp_group(pcp)[0].order()


def coset_permutations(pcp: PcPresentation) -> List[Permutation]:
    """
    Images of the pc generators in the regular representation of the finitely
    presented group, read off a coset table over the trivial subgroup.
    """
    group, gens = _fp_group(pcp)
    table = coset_enumeration_r(group, [])
    table.compress()
    table.standardize()
    return [Permutation([row[table.A_dict[g]] for row in table.table]) for g in gens]
