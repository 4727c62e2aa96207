import copy
import json

import pytest

from horochow.catalog import (
    BUILTINS,
    CLASSIFICATION,
    SuiteOptions,
    available,
    builtin,
    builtin_text,
    load_spec,
    resolve,
    run_suite,
    serialize,
    to_document,
)
from horochow.errors import InvariantViolation, SchemaError, UnknownVariety


@pytest.fixture
def g2_doc():
    return json.loads(builtin_text("g2"))


@pytest.mark.parametrize("name", BUILTINS)
def test_round_trip_is_byte_identical(name):
    text = builtin_text(name)
    spec = load_spec(text)
    assert serialize(spec) == text
    assert serialize(load_spec(serialize(spec))) == text
    assert to_document(load_spec(to_document(spec))) == to_document(spec)


def test_q_degree_must_equal_index(g2_doc):
    g2_doc["index"] = 3
    with pytest.raises(InvariantViolation) as info:
        load_spec(g2_doc)
    assert info.value.invariant == "q_degree_equals_index"


def test_schema_errors(g2_doc):
    bad = copy.deepcopy(g2_doc)
    del bad["hasse"]
    with pytest.raises(SchemaError):
        load_spec(bad)
    bad = copy.deepcopy(g2_doc)
    bad["hasse"]["edges"][0]["mult"] = "two"
    with pytest.raises(SchemaError):
        load_spec(bad)
    bad = copy.deepcopy(g2_doc)
    bad["relations"]["classical"][0] = "3*s^^2"
    with pytest.raises(SchemaError):
        load_spec(bad)
    with pytest.raises(SchemaError):
        load_spec("{not json")


def test_dangling_golden_symbol(g2_doc):
    g2_doc["golden"]["tables"]["first"][0]["rhs"] = "2*s9"
    with pytest.raises(InvariantViolation) as info:
        load_spec(g2_doc)
    assert info.value.invariant == "golden_symbols_resolve"


def test_hilbert_must_match_diagram(g2_doc):
    g2_doc["golden"]["hilbert"][1] = 2
    with pytest.raises(InvariantViolation):
        load_spec(g2_doc)


def test_unknown_variety():
    with pytest.raises(UnknownVariety):
        resolve("f4")


def test_spec_dir(tmp_path, monkeypatch, g2_doc):
    g2_doc["name"] = "g2copy"
    (tmp_path / "g2copy.json").write_text(json.dumps(g2_doc), encoding="utf-8")
    monkeypatch.setenv("HOROCHOW_SPEC_DIR", str(tmp_path))
    assert "g2copy" in available()
    assert resolve("g2copy").name == "g2copy"
    assert resolve(str(tmp_path / "g2copy.json")).dimension == 7


def test_classification_points_at_builtins():
    cataloged = {f["catalog"] for f in CLASSIFICATION if f["catalog"]}
    assert cataloged == set(BUILTINS)
    assert len(CLASSIFICATION) == 5


def test_g2_full_suite_passes():
    report = run_suite(builtin("g2"), SuiteOptions.everything())
    assert report.ok, [c.line() for c in report if not c.passed]
    assert report.find("g2.fundamental.class").passed
    assert report.find("g2.semisimple.certificate").passed
    assert report.find("g2.table.first.01").passed


def test_spin7_classical_content():
    report = run_suite(builtin("spin7"))
    assert report.ok, [c.line() for c in report if not c.passed]
    ids = {c.id for c in report}
    assert {"spin7.relation.htau2", "spin7.spinor.degree", "spin7.degrees.hasse"} <= ids
    assert report.find("spin7.relation.htau2").summary == "hτ²=0"


def test_suite_is_deterministic():
    spec = builtin("spin7")
    opts = SuiteOptions.everything()
    assert run_suite(spec, opts).to_json() == run_suite(spec, opts).to_json()


def test_failing_check_becomes_error_not_abort(g2_doc):
    g2_doc["golden"]["identities"].append({"id": "q_outside_classical", "lhs": "q*h", "rhs": "0"})
    report = run_suite(load_spec(g2_doc))
    bad = report.find("g2.relation.q_outside_classical")
    assert bad.status == "error"
    assert report.counts()["pass"] > 50
