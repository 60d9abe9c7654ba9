import pytest

from conftest import x27
from pcgroup.corpus import corpus_entry
from pcgroup.corpus.acceptance import identity_samples, verify_entry
from pcgroup.corpus.wreath import sylow2_of_s8
from pcgroup.errors import HypothesisError, PresentationError
from pcgroup.subgroups import induced_sequence, lower_central_series
from pcgroup.verify import (
    central_decomposition,
    check_decomposition,
    classify_derived_subgroup,
    hypothesis_check,
    is_standard_pair,
    normalize_generating_set,
    reduce_generators,
    require_hypotheses,
    standard_pair,
    structure,
    verify_burnside_lemma,
    verify_chain,
    verify_hall_bounds,
    verify_power_central,
    verify_theorem_1,
    verify_transfer_lemma,
)
from pcgroup.verify.suite import check_names, run_checks


@pytest.fixture(scope="module")
def example_c():
    return corpus_entry("C").group()


@pytest.fixture(scope="module")
def example_d():
    return corpus_entry("D").group()


@pytest.fixture(scope="module")
def example_e():
    return corpus_entry("E").group()


def statuses(checklist):
    return {item.name: item.status for item in checklist.items}


def test_hypotheses_on_example_c(example_c):
    report = hypothesis_check(example_c)
    assert report.satisfied
    assert report.derived_quotient_order == 5 ** 3
    assert report.lower_quotient_order == 5


def test_hypotheses_refuse_metabelian_and_even():
    assert not hypothesis_check(x27()).satisfied
    with pytest.raises(HypothesisError, match="hypotheses fail"):
        require_hypotheses(x27())
    with pytest.raises(HypothesisError, match="p ≥ 3"):
        verify_theorem_1(sylow2_of_s8())


def test_theorem_1_on_example_c(example_c):
    assert verify_theorem_1(example_c).passed
    assert verify_chain(example_c).passed


def test_hall_bounds(example_c):
    assert statuses(verify_hall_bounds(example_c)) == {"|G'/G''| >= p^3": "pass", "|G''| = p": "pass"}
    assert set(statuses(verify_hall_bounds(x27())).values()) == {"not-applicable"}
    w = statuses(verify_hall_bounds(sylow2_of_s8()))
    assert w == {"|G'/G''| >= p^3": "pass", "|G''| = p": "not-applicable"}


def test_example_c_is_x_type(example_c):
    assert classify_derived_subgroup(example_c) == "X-type"
    assert [t.order for t in structure(example_c).lcs] == [5 ** 6, 5 ** 4, 5 ** 3, 5 ** 2, 5, 1]
    assert verify_power_central(example_c).passed


def test_example_d_is_x_type_with_power_check_not_applicable(example_d):
    assert structure(example_d).derived_term(1).order == 3 ** 4
    assert classify_derived_subgroup(example_d) == "X-type"
    assert set(statuses(verify_power_central(example_d)).values()) == {"not-applicable"}


def test_example_e_is_y_type(example_e):
    assert classify_derived_subgroup(example_e) == "Y-type"
    checks = verify_power_central(example_e)
    assert checks.passed and statuses(checks) == {"G^25 <= Z(G)": "pass"}


def test_reduction_and_standard_pair(example_c):
    s = structure(example_c)
    h = reduce_generators(example_c)
    assert h.order == example_c.order
    assert verify_transfer_lemma(example_c, h.gens).passed
    a, b = standard_pair(example_c)
    assert is_standard_pair(s, a, b)


def test_transfer_lemma_precondition(example_c):
    small = induced_sequence(example_c, [example_c.generator(0)])
    assert set(statuses(verify_transfer_lemma(example_c, small.gens)).values()) == {"not-applicable"}


def test_two_generator_decomposition(example_c):
    gens = normalize_generating_set(example_c)
    assert gens.us == ()
    decomposition = central_decomposition(example_c)
    assert decomposition.h_generator_count == 2
    assert decomposition.h.order == example_c.order
    assert decomposition.checks.passed


def test_decomposition_checks_reject_a_bad_split(example_c):
    s = structure(example_c)
    checks = check_decomposition(example_c, [example_c.generator(0)], s.center.gens)
    assert not checks.passed
    assert "G = HU" in {item.name for item in checks.failures()}


def test_burnside_lemma(example_c):
    assert verify_burnside_lemma(example_c).passed


def test_named_check_groups(example_c):
    assert check_names()[-1] == "all"
    for name in check_names():
        assert all(c.passed for c in run_checks(example_c, name))


def test_unknown_check_name(example_c):
    with pytest.raises(PresentationError):
        run_checks(example_c, "everything")


def test_all_checks_refuse_sylow2():
    with pytest.raises(HypothesisError):
        run_checks(sylow2_of_s8(), "all")


def test_identity_samples_on_sylow2():
    assert identity_samples(sylow2_of_s8(), seed=7).passed


@pytest.mark.parametrize("name", ["C", "D", "E", "W"])
def test_acceptance_entries(name):
    report = verify_entry(corpus_entry(name), seed=1)
    assert report.error is None
    assert report.passed, [c.model_dump() for c in report.checklists if not c.passed]


@pytest.mark.slow
def test_acceptance_example_a():
    report = verify_entry(corpus_entry("A"), seed=1)
    assert report.passed, report.error
    titles = {c.title for c in report.checklists}
    assert {"exampleA expectations", "central decomposition", "minimality of the H generator count"} <= titles


@pytest.mark.slow
def test_acceptance_example_b():
    report = verify_entry(corpus_entry("B"), seed=1)
    assert report.passed, report.error
    assert [c.left for c in report.comparisons] == ["H1", "U1"]
    for comparison in report.comparisons:
        assert comparison.verdict


def test_lower_central_series_of_decomposition_h(example_c):
    decomposition = central_decomposition(example_c)
    h_orders = [t.order for t in lower_central_series(example_c, decomposition.h)]
    assert h_orders == [t.order for t in structure(example_c).lcs]


@pytest.mark.slow
def test_power_centrality_is_decided_on_example_b():
    checks = verify_power_central(corpus_entry("B").group())
    assert "skipped" not in statuses(checks).values()
    assert checks.passed
