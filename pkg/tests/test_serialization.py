import pytest

from conftest import maximal_class_81, y125
from pcgroup.pcp.presentation import build
from pcgroup.errors import PresentationError
from pcgroup.pcp.serialization import from_json, load_pcp, save_pcp, to_document, to_json


def test_json_keeps_the_presentation():
    pcp = y125()
    again = from_json(to_json(pcp))
    assert again == pcp
    assert again.names == pcp.names


def test_document_layout():
    doc = to_document(maximal_class_81())
    assert doc.n == 4
    assert doc.comm_tails == {"1,0": [0, 0, 1, 0], "2,0": [0, 0, 0, 1]}
    assert doc.schema_version == 1


def test_save_and_load(tmp_path):
    path = tmp_path / "g.pcp.json"
    save_pcp(maximal_class_81(), path)
    assert load_pcp(path) == maximal_class_81()


def test_invalid_document():
    with pytest.raises(PresentationError):
        from_json('{"p": 3, "n": 2, "weights": [1]}')
    with pytest.raises(PresentationError):
        from_json('{"p": 3, "n": 2, "weights": [1, 1], "comm_tails": {"1,0": [1, 0]}}')


def _power_clash():
    return build(3, [1, 2, 3], powers={1: {2: 1}}, commutators={(2, 1): {3: 1}})


def test_consistent_mark_is_checked():
    text = to_json(_power_clash().with_consistency(True))
    with pytest.raises(PresentationError, match="marked consistent"):
        from_json(text)


def test_unmarked_document_loads_without_checks():
    pcp = from_json(to_json(_power_clash()))
    assert not pcp.consistent
    assert pcp.n == 3


def test_consistent_mark_survives_when_true():
    pcp = maximal_class_81().with_consistency(True)
    assert from_json(to_json(pcp)).consistent


def test_load_errors(tmp_path):
    with pytest.raises(PresentationError, match="cannot read"):
        load_pcp(tmp_path / "missing.json")
    path = tmp_path / "bad.json"
    path.write_bytes(b'{"p": 3, "n": 1, "weights": [1], "names": ["\xff"]}')
    with pytest.raises(PresentationError, match="not UTF-8"):
        load_pcp(path)
