import itertools

import pytest
from sympy.combinatorics.perm_groups import PermutationGroup

from conftest import SMALL_GROUPS, dihedral8, maximal_class_81, quaternion8, x27, y125
from pcgroup.corpus.wreath import sylow2_of_s8, sylow2_permutation_group
from pcgroup.errors import EnumerationCapError, NotAbelianError, NotContainedError
from pcgroup.pcp.collector import commutator, multiply, power
from pcgroup.pcp.presentation import build, elementary_abelian
from pcgroup.subgroups import (
    FrattiniQuotient,
    abelian_invariants,
    abelianization_invariants,
    agemo,
    canonical,
    center,
    commutator_subgroup,
    derived_series,
    elements,
    exponent_p_central_series,
    frattini,
    frattini_rank,
    induced_sequence,
    intersection,
    is_elementary_abelian_section,
    is_normal,
    is_subgroup,
    lower_central_series,
    minimal_generators,
    nilpotency_class,
    normal_closure,
    omega_count,
    same_subgroup,
    sift,
    subgroup_product,
    transversal,
    trivial_subgroup,
    upper_central_series,
    whole_group,
)
from pcgroup.subgroups.series import is_central_series


def c9_times_c3():
    return build(3, [1, 1, 2], powers={1: {3: 1}})


def _closure_brute(pcp, gens):
    """All products of generators until nothing new appears."""
    seen = {pcp.identity()}
    frontier = [pcp.identity()]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = multiply(pcp, x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_induced_sequence_shape():
    pcp = maximal_class_81()
    seq = induced_sequence(pcp, [(1, 1, 0, 0), (0, 1, 0, 0)])
    assert seq.order == 81
    assert len(set(seq.pivots)) == seq.length
    assert all(g[d] == 1 for g, d in zip(seq.gens, seq.pivots))


def test_sift_witness_rebuilds_element():
    pcp = maximal_class_81()
    seq = induced_sequence(pcp, [(0, 1, 0, 0), (0, 0, 0, 1)])
    x = multiply(pcp, (0, 1, 0, 0), (0, 0, 0, 2))
    result = sift(seq, x)
    assert result.member
    rebuilt = pcp.identity()
    for g, e in zip(seq.gens, result.witness):
        for _ in range(e):
            rebuilt = multiply(pcp, rebuilt, g)
    assert rebuilt == x
    assert (1, 0, 0, 0) not in seq


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_subgroup_order_matches_closure(name):
    pcp = SMALL_GROUPS[name]()
    for gens in itertools.combinations(pcp.generators(), 2):
        seq = induced_sequence(pcp, gens)
        brute = _closure_brute(pcp, gens)
        assert seq.order == len(brute)
        assert set(elements(seq)) == brute
        assert pcp.order % seq.order == 0


def test_canonical_form_identifies_subgroups():
    pcp = maximal_class_81()
    a = induced_sequence(pcp, [(0, 1, 0, 0), (0, 0, 1, 0)])
    b = induced_sequence(pcp, [(0, 1, 2, 0), (0, 0, 2, 0)])
    assert same_subgroup(a, b)
    assert canonical(a).gens == canonical(b).gens
    assert a == b
    assert hash(a) == hash(b)


def test_products_closures_and_normality():
    pcp = maximal_class_81()
    g1, g2, g3, g4 = pcp.generators()
    assert normal_closure(pcp, [g2], pcp.generators()).order == 27
    assert not is_normal(pcp, induced_sequence(pcp, [g2]))
    assert is_normal(pcp, induced_sequence(pcp, [g4]))
    assert subgroup_product(induced_sequence(pcp, [g1]), induced_sequence(pcp, [g4])).order == 9
    assert commutator_subgroup(pcp, whole_group(pcp), whole_group(pcp)).order == 9
    assert is_subgroup(trivial_subgroup(pcp), induced_sequence(pcp, [g3]))


def test_intersection():
    pcp = elementary_abelian(3, 3)
    g1, g2, g3 = pcp.generators()
    a = induced_sequence(pcp, [g1, g2])
    b = induced_sequence(pcp, [multiply(pcp, g1, g3), g2])
    assert intersection(a, b) == induced_sequence(pcp, [g2])


def test_series_of_maximal_class_group():
    pcp = maximal_class_81()
    assert [t.order for t in lower_central_series(pcp)] == [81, 9, 3, 1]
    assert nilpotency_class(pcp) == 3
    assert [t.order for t in derived_series(pcp)] == [81, 9, 1]
    assert center(pcp).order == 3
    assert [t.order for t in upper_central_series(pcp)] == [1, 3, 9, 81]
    assert is_central_series(pcp, lower_central_series(pcp))


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_lower_central_series_by_definition(name):
    pcp = SMALL_GROUPS[name]()
    series = lower_central_series(pcp)
    for upper, lower in zip(series, series[1:]):
        brute = {commutator(pcp, x, g) for x in elements(upper) for g in elements(whole_group(pcp))}
        assert same_subgroup(lower, induced_sequence(pcp, brute))


def test_frattini_and_generators():
    pcp = y125()
    assert frattini(pcp).order == 5
    assert frattini_rank(pcp) == 2
    fq = FrattiniQuotient(pcp)
    assert fq.rank == 2
    assert fq.coordinates((3, 4, 2)) == (3, 4)
    assert induced_sequence(pcp, minimal_generators(pcp)).order == pcp.order


def test_exponent_p_central_series_of_y125():
    # P_2 = [G, G] G^5 = <g3>
    assert [t.order for t in exponent_p_central_series(y125())] == [125, 5, 1]


def test_abelian_invariants():
    assert abelian_invariants(c9_times_c3()) == [9, 3]
    assert abelian_invariants(elementary_abelian(5, 2)) == [5, 5]
    with pytest.raises(NotAbelianError):
        abelian_invariants(x27())


def test_abelianization_invariants():
    assert abelianization_invariants(x27()) == [3, 3]
    assert abelianization_invariants(quaternion8()) == [2, 2]
    assert abelianization_invariants(maximal_class_81()) == [3, 3]


def test_agemo_and_omega():
    assert agemo(y125()).order == 5
    assert agemo(x27()).is_trivial()
    assert omega_count(dihedral8()) == 6
    assert agemo(c9_times_c3(), 2).is_trivial()


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("PCGROUP_MAX_ENUMERATION_ORDER", "10")
    from pcgroup.configuration.config_loader import reset_config

    reset_config()
    with pytest.raises(EnumerationCapError):
        list(elements(whole_group(x27())))


def test_elementary_section():
    pcp = maximal_class_81()
    series = lower_central_series(pcp)
    assert is_elementary_abelian_section(pcp, series[0], series[1])
    assert not is_elementary_abelian_section(pcp, series[0], series[3])
    with pytest.raises(NotContainedError):
        is_elementary_abelian_section(pcp, series[2], series[0])


def test_wreath_product_matches_permutation_group():
    pcp = sylow2_of_s8()
    group: PermutationGroup = sylow2_permutation_group()
    assert pcp.order == group.order() == 128
    assert [t.order for t in derived_series(pcp)] == [h.order() for h in group.derived_series()]
    assert [t.order for t in lower_central_series(pcp)] == [h.order() for h in group.lower_central_series()]


def _agemo_by_enumeration(pcp, k, sub=None):
    top = sub if sub is not None else whole_group(pcp)
    return induced_sequence(pcp, {power(pcp, x, pcp.p ** k) for x in elements(top)})


def _example_c_group():
    from pcgroup.corpus import corpus_entry

    return corpus_entry("C").group()


AGEMO_GROUPS = {**SMALL_GROUPS, "C9xC3": c9_times_c3, "W": sylow2_of_s8, "exampleC": _example_c_group}


@pytest.mark.parametrize("name", sorted(AGEMO_GROUPS))
@pytest.mark.parametrize("k", [1, 2])
def test_agemo_matches_all_powers(name, k):
    pcp = AGEMO_GROUPS[name]()
    assert agemo(pcp, k) == _agemo_by_enumeration(pcp, k)


def test_agemo_of_a_subgroup_matches_all_powers():
    pcp = sylow2_of_s8()
    for start in range(3):
        sub = induced_sequence(pcp, pcp.generators()[start:])
        assert agemo(pcp, 1, sub) == _agemo_by_enumeration(pcp, 1, sub)
    pcp = _example_c_group()
    sub = induced_sequence(pcp, [pcp.generator(1), pcp.generator(2)])
    assert agemo(pcp, 1, sub) == _agemo_by_enumeration(pcp, 1, sub)


def test_agemo_does_not_enumerate(monkeypatch):
    monkeypatch.setenv("PCGROUP_MAX_ENUMERATION_ORDER", "10")
    from pcgroup.configuration.config_loader import reset_config

    reset_config()
    assert agemo(y125()).order == 5


def test_transversal_hits_every_coset_once():
    pcp = maximal_class_81()
    lower = lower_central_series(pcp)[1]
    reps = list(transversal(whole_group(pcp), lower))
    assert len(reps) == 9
    cosets = {frozenset(multiply(pcp, t, x) for x in elements(lower)) for t in reps}
    assert len(cosets) == 9


@pytest.mark.parametrize("name", sorted(SMALL_GROUPS))
def test_intersection_with_normal_subgroups_matches_enumeration(name):
    pcp = SMALL_GROUPS[name]()
    normals = lower_central_series(pcp) + [center(pcp)]
    subs = [induced_sequence(pcp, [g]) for g in pcp.generators()]
    subs.append(induced_sequence(pcp, [multiply(pcp, pcp.generator(0), pcp.generator(pcp.n - 1))]))
    for a in subs:
        for b in normals:
            brute = induced_sequence(pcp, [x for x in elements(a) if x in b])
            assert intersection(a, b) == brute
            assert intersection(b, a) == brute
