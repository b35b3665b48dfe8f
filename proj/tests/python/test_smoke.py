"""Smoke tests for the Python bindings: the pipeline runs end to end and the
headline numbers match the C++ acceptance values."""

import json

import pytest

import cellfrob


@pytest.fixture(scope="module")
def kx_spec():
    return cellfrob.builtin("koenig-xi", {"lambda": "2"})


def test_builtin_roundtrip(kx_spec):
    assert cellfrob.roundtrip(kx_spec) == kx_spec
    doc = json.loads(kx_spec)
    assert doc["dim"] == 6
    assert doc["field"] == {"type": "rational"}


def test_validate(kx_spec):
    rep = cellfrob.validate_dict(kx_spec)
    assert rep["status"]["valid"] is True
    names = {c["name"]: c["passed"] for c in rep["validation"]["algebra"]["checks"]}
    assert names["associativity"] is True
    assert names["trace_form_nondegenerate"] is True


def test_full_report_koenig_xi(kx_spec):
    rep = cellfrob.report_dict(kx_spec)
    assert rep["headline"] == "none of the cell modules is projective"
    assert rep["status"]["exit_code"] == 0
    # dual of b must be c/lambda
    assert rep["dual_bases"]["left_dual"][3][2] == "1/2"
    by_label = {c["label"]: c for c in rep["cells"]}
    assert by_label["3"]["gram"] == [["1"]]
    assert by_label["3"]["gram_prime"] == [["0"]]
    assert by_label["2"]["rank_gram"] == 0
    assert all(not c["verdicts"]["C"]["oracle_splitting"] for c in rep["cells"])


def test_matrix_fixture_projective():
    spec = cellfrob.builtin("matrix", {"n": "2"})
    rep = cellfrob.report_dict(spec)
    assert rep["headline"] == "every cell module is projective"
    cell = rep["cells"][0]
    assert cell["k"] == {"defined": True, "value": "1", "per_t_sums": ["1", "1"]}
    assert cell["verdicts"]["C"]["agreement"] is True


def test_dual_numbers_boundary_flag():
    spec = cellfrob.builtin("dual-numbers")
    rep = cellfrob.report_dict(spec)
    assert "x/C" in rep["status"]["boundary_cases"]
    assert rep["status"]["disagreements"] == []


def test_oracle(kx_spec):
    out = cellfrob.oracle_dict(kx_spec, "2", flavor="d")
    assert out["oracles_agree"] is True
    assert out["projective"] is False


def test_prime_field():
    spec = cellfrob.builtin("koenig-xi", {"field": "5", "lambda": "3"})
    rep = cellfrob.report_dict(spec)
    assert rep["input"]["field"] == "prime field F_5"
    assert rep["headline"] == "none of the cell modules is projective"


def test_errors_are_python_exceptions():
    with pytest.raises(cellfrob.SpecParseError):
        cellfrob.report("{not json")
    with pytest.raises(cellfrob.SpecParseError):
        cellfrob.builtin("koenig-xi", {"lambda": "1"})
    bad = json.loads(cellfrob.builtin("koenig-xi"))
    bad["trace"] = ["0"] * 6
    rep = cellfrob.report_dict(json.dumps(bad))
    assert rep["status"]["valid"] is False
    assert rep["status"]["exit_code"] == 1


def test_report_text(kx_spec):
    text = cellfrob.report_text(kx_spec)
    assert "none of the cell modules is projective" in text
