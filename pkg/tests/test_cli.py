import json

import pytest
from typer.testing import CliRunner

from conftest import x27
from pcgroup.corpus import data_directory
from pcgroup.main import EXIT_CHECK_FAILED, EXIT_ERROR, EXIT_OK, app
from pcgroup.pcp.serialization import load_pcp, save_pcp

runner = CliRunner(mix_stderr=False)


def invoke(*args):
    return runner.invoke(app, [str(a) for a in args])


@pytest.fixture
def trivial_grp(tmp_path):
    path = tmp_path / "trivial.grp"
    path.write_text("name cyclic\nprime 3\ngenerators a\nrelators a^3\n")
    return path


@pytest.fixture
def x27_json(tmp_path):
    path = tmp_path / "x27.json"
    save_pcp(x27(), path)
    return path


def test_quotient_json_and_output_file(trivial_grp, tmp_path):
    out = tmp_path / "cyclic.json"
    result = invoke("quotient", trivial_grp, "--json", "--out", out)
    assert result.exit_code == EXIT_OK, result.stderr
    data = json.loads(result.stdout)
    assert data["status"] == "ok"
    assert (data["order"], data["achieved_class"], data["stabilized"]) == (3, 1, True)
    assert load_pcp(out).order == 3


def test_quotient_of_bundled_example():
    result = invoke("quotient", data_directory() / "exampleC.grp", "--json")
    assert result.exit_code == EXIT_OK
    data = json.loads(result.stdout)
    assert data["order"] == 5 ** 6
    assert data["history"][-1] == 5 ** 6


def test_quotient_table(trivial_grp):
    result = invoke("quotient", trivial_grp)
    assert result.exit_code == EXIT_OK
    assert "stabilized" in result.stdout


def test_series_of_cyclic_group(trivial_grp):
    result = invoke("series", trivial_grp, "--json")
    assert result.exit_code == EXIT_OK
    data = json.loads(result.stdout)
    assert data["lower_central"] == [3, 1]
    assert data["derived"] == [3, 1]
    assert data["nilpotency_class"] == 1


def test_series_from_pcp_json(x27_json):
    data = json.loads(invoke("series", x27_json, "--json").stdout)
    assert data["lower_central"] == [27, 3, 1]
    assert data["center_order"] == 3
    assert data["frattini_rank"] == 2


def test_check_passes_on_example_c():
    result = invoke("check", "theorem1", data_directory() / "exampleC.grp", "--json")
    assert result.exit_code == EXIT_OK
    assert json.loads(result.stdout)["status"] == "pass"


def test_check_outside_hypotheses(x27_json):
    result = invoke("check", "theorem1", x27_json, "--json")
    assert result.exit_code == EXIT_ERROR
    data = json.loads(result.stdout)
    assert (data["status"], data["error"]) == ("error", "HypothesisError")


def test_check_with_not_applicable_items_still_passes(x27_json):
    result = invoke("check", "hall", x27_json)
    assert result.exit_code == EXIT_OK
    assert "not-applicable" in result.stdout


def test_unknown_check_is_an_error(x27_json):
    result = invoke("check", "nonsense", x27_json, "--json")
    assert result.exit_code == EXIT_ERROR
    assert json.loads(result.stdout)["error"] == "PresentationError"


def test_parse_error_reports_position(tmp_path):
    bad = tmp_path / "bad.grp"
    bad.write_text("prime 3\ngenerators a\nrelators b^3\n")
    result = invoke("quotient", bad, "--json")
    assert result.exit_code == EXIT_ERROR
    data = json.loads(result.stdout)
    assert data["error"] == "ParseError"
    assert "line 3, column 10" in data["message"]


def test_decompose_example_c():
    result = invoke("decompose", data_directory() / "exampleC.grp", "--json")
    assert result.exit_code == EXIT_OK, result.stdout


def test_corpus_verify_on_a_small_directory(tmp_path):
    (tmp_path / "tiny.grp").write_text("prime 3\ngenerators a, b\nrelators a^3, b^3, [b,a]\n")
    result = invoke("corpus-verify", tmp_path, "--no-fuzz", "--json", "--seed", 3)
    assert result.exit_code == EXIT_OK, result.stdout
    data = json.loads(result.stdout)
    assert [e["name"] for e in data["entries"]] == ["tiny", "W"]


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_CHECK_FAILED, EXIT_ERROR) == (0, 1, 2)


@pytest.mark.parametrize("suffix", [".grp", ".json"])
def test_undecodable_input_is_an_error(tmp_path, suffix):
    path = tmp_path / f"bad{suffix}"
    path.write_bytes(b"prime 3\ngenerators \xff\n")
    result = invoke("series", path, "--json")
    assert result.exit_code == EXIT_ERROR
    data = json.loads(result.stdout)
    assert data["error"] == "PresentationError"
    assert "not UTF-8" in data["message"]
