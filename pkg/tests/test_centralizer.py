import itertools

import pytest

from conftest import SMALL_GROUPS, maximal_class_81, x27
from pcgroup.corpus.wreath import sylow2_of_s8
from pcgroup.errors import PresentationError
from pcgroup.pcp.collector import commutator
from pcgroup.quotient.fp import FpPresentation
from pcgroup.quotient.pquotient import p_quotient
from pcgroup.pcp.words import gen
from pcgroup.subgroups import (
    center,
    center_modulo,
    centralizer,
    elements,
    induced_sequence,
    lower_central_series,
    same_subgroup,
    subgroup_center,
    whole_group,
)


def _brute_centralizer(pcp, targets):
    return induced_sequence(pcp, [
        x for x in elements(whole_group(pcp))
        if all(not any(commutator(pcp, x, t)) for t in targets)
    ])


def _groups_up_to_729():
    groups = {name: make() for name, make in SMALL_GROUPS.items()}
    groups["W"] = sylow2_of_s8()
    free = FpPresentation(p=3, generators=("a", "b"), relators=(gen("a", 3), gen("b", 3)))
    groups["C3*C3 class 3"] = p_quotient(free, 3).pcp
    return {name: pcp for name, pcp in groups.items() if pcp.order <= 3 ** 6}


GROUPS = _groups_up_to_729()


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_lifting_agrees_with_brute_force(name):
    pcp = GROUPS[name]
    candidates = pcp.generators() + [tuple(1 for _ in range(pcp.n))]
    for targets in itertools.chain(([t] for t in candidates), itertools.combinations(candidates, 2)):
        lifted = centralizer(pcp, targets, method="lifting")
        brute = centralizer(pcp, targets, method="brute")
        assert same_subgroup(lifted, brute)
        assert same_subgroup(lifted, _brute_centralizer(pcp, targets))


@pytest.mark.parametrize("name", sorted(GROUPS))
def test_center_by_both_methods(name):
    pcp = GROUPS[name]
    assert same_subgroup(center(pcp, method="lifting"), center(pcp, method="brute"))


def test_centralizer_within_a_subgroup():
    pcp = maximal_class_81()
    derived = lower_central_series(pcp)[1]
    assert same_subgroup(subgroup_center(pcp, derived, method="lifting"), derived)
    assert centralizer(pcp, [pcp.generator(0)], within=derived).order == 3


def test_center_modulo_gives_second_centre():
    pcp = maximal_class_81()
    assert center_modulo(pcp, center(pcp)).order == 9


def test_no_targets_gives_everything():
    pcp = x27()
    assert centralizer(pcp, [pcp.identity()]).order == 27


def test_unknown_method():
    pcp = x27()
    with pytest.raises(PresentationError):
        centralizer(pcp, [pcp.generator(0)], method="guess")
