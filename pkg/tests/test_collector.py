import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from conftest import SMALL_GROUPS, coset_permutations, dihedral8, quaternion8, random_words, words, x27, y125
from pcgroup.errors import PresentationError
from pcgroup.pcp.collector import (
    collect,
    commutator,
    conjugate,
    element_order,
    enumerate_elements,
    invert,
    multiply,
    power,
    product,
)
from pcgroup.pcp.identities import collection_formula_residual, hall_witt_residual, hall_witt_residual_expanded
from pcgroup.pcp.presentation import PcPresentation, build
from pcgroup.pcp.words import comm, gen
from pcgroup.subgroups.invariants import element_order_histogram
from pcgroup.subgroups.series import derived_series, lower_central_series, upper_central_series


def test_extraspecial_commutator():
    pcp = x27()
    g1, g2, g3 = pcp.generators()
    assert commutator(pcp, g2, g1) == g3
    assert commutator(pcp, g1, g2) == power(pcp, g3, -1)
    assert commutator(pcp, g3, g1) == pcp.identity()


def test_multiply_reorders_generators():
    pcp = x27()
    g1, g2, _ = pcp.generators()
    # g2 g1 = g1 g2 [g2, g1]
    assert multiply(pcp, g2, g1) == (1, 1, 1)


def test_element_orders():
    assert element_order(y125(), y125().generator(0)) == 25
    assert element_order(x27(), (1, 2, 1)) == 3
    assert element_order_histogram(dihedral8()) == {1: 1, 2: 5, 4: 2}
    assert element_order_histogram(quaternion8()) == {1: 1, 2: 1, 4: 6}


def test_collect_free_words():
    pcp = x27()
    assert collect(pcp, comm("g2", "g1")) == (0, 0, 1)
    assert collect(pcp, gen("g1", 3)) == pcp.identity()
    assert collect(pcp, gen("g1") * gen("g2", -1)) == (1, 2, 0)


def test_collect_unknown_generator():
    with pytest.raises(PresentationError):
        collect(x27(), gen("u"))


def test_enumerate_elements_counts_the_group():
    pcp = dihedral8()
    elements = list(enumerate_elements(pcp))
    assert len(elements) == 8
    assert len(set(elements)) == 8


def test_tails_must_point_below():
    with pytest.raises(PresentationError):
        build(3, [1, 1], commutators={(2, 1): {1: 1}})
    with pytest.raises(PresentationError):
        build(3, [2, 1])


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_group_axioms(name):
    pcp: PcPresentation = SMALL_GROUPS[name]()

    @given(words(pcp), words(pcp), words(pcp))
    @settings(max_examples=150, deadline=None)
    def axioms(x, y, z):
        assert multiply(pcp, multiply(pcp, x, y), z) == multiply(pcp, x, multiply(pcp, y, z))
        assert multiply(pcp, x, invert(pcp, x)) == pcp.identity()
        assert multiply(pcp, invert(pcp, x), x) == pcp.identity()
        assert multiply(pcp, pcp.identity(), x) == x
        assert power(pcp, x, -1) == invert(pcp, x)
        assert conjugate(pcp, x, y) == product(pcp, invert(pcp, y), x, y)

    axioms()


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_hall_witt(name):
    pcp = SMALL_GROUPS[name]()
    sample = random_words(pcp, 300, seed=7)
    for x, y, z in zip(sample[0::3], sample[1::3], sample[2::3]):
        assert hall_witt_residual(pcp, x, y, z) == pcp.identity()
        assert hall_witt_residual_expanded(pcp, x, y, z) == pcp.identity()


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_collection_formula(name):
    pcp = SMALL_GROUPS[name]()
    sample = random_words(pcp, 100, seed=11)
    for x, y in zip(sample[0::2], sample[1::2]):
        residual, bound = collection_formula_residual(pcp, x, y)
        assert residual in bound


@given(st.integers(-30, 30), st.integers(-30, 30))
def test_power_laws(a, b):
    pcp = y125()
    x = (2, 3, 1)
    assert multiply(pcp, power(pcp, x, a), power(pcp, x, b)) == power(pcp, x, a + b)


def _permutation_model(pcp):
    images = coset_permutations(pcp)
    identity = Permutation(images[0].size - 1)

    def image(w):
        result = identity
        for g, e in zip(images, w):
            result = result * g ** e
        return result

    return images, {w: image(w) for w in enumerate_elements(pcp)}


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_multiplication_table_matches_coset_permutations(name):
    pcp = SMALL_GROUPS[name]()
    _, model = _permutation_model(pcp)
    assert len(set(model.values())) == len(model) == pcp.order
    for u, pu in model.items():
        for v, pv in model.items():
            assert model[multiply(pcp, u, v)] == pu * pv, (u, v)


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_series_match_permutation_group(name):
    pcp = SMALL_GROUPS[name]()
    images, _ = _permutation_model(pcp)
    group = PermutationGroup(images)
    assert group.order() == pcp.order
    assert [t.order for t in lower_central_series(pcp)] == [h.order() for h in group.lower_central_series()]
    assert [t.order for t in derived_series(pcp)] == [h.order() for h in group.derived_series()]
    assert upper_central_series(pcp)[1].order == group.center().order()


def test_extraspecial_27_table_facts():
    pcp = x27()
    g1, g2, g3 = pcp.generators()
    g12 = multiply(pcp, g1, g2)
    assert multiply(pcp, multiply(pcp, g12, g12), g12) == pcp.identity()
    assert multiply(pcp, multiply(pcp, invert(pcp, g2), invert(pcp, g1)), multiply(pcp, g2, g1)) == g3
    elements = list(enumerate_elements(pcp))
    for x in elements[::4]:
        for y in elements[::3]:
            for z in elements[::5]:
                assert multiply(pcp, multiply(pcp, x, y), z) == multiply(pcp, x, multiply(pcp, y, z))
