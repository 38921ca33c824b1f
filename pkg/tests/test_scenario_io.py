import copy
import json
from fractions import Fraction

import pytest

from folsurf.errors import ParseError
from folsurf.fixtures import bundled_documents, second_noether_ruled, slope_12_7
from folsurf.scenario_io import (
    document_to_dict,
    fmt_rational,
    parse_document_dict,
    parse_rational,
    parse_scenario,
    run_pipeline,
    serialize_document,
)


def test_fmt_and_parse_rational_roundtrip():
    for q in (Fraction(3), Fraction(-7, 2), Fraction(0), Fraction(22, 7)):
        assert parse_rational(fmt_rational(q), "$") == q


def test_parse_rational_rejects_zero_denominator():
    with pytest.raises(ParseError):
        parse_rational("1/0", "$.x")


def test_parse_rational_rejects_floats_and_garbage():
    with pytest.raises(ParseError):
        parse_rational("0.5", "$")
    with pytest.raises(ParseError):
        parse_rational("a/b", "$")


def test_round_trip_stability():
    for stem, doc in bundled_documents().items():
        parsed = parse_scenario(json.dumps(doc))
        text = serialize_document(parsed)
        reparsed = parse_scenario(text)
        assert document_to_dict(parsed) == document_to_dict(reparsed), stem
        assert serialize_document(reparsed) == text, stem


def test_unknown_key_rejected():
    doc = second_noether_ruled(3)
    doc["mystery"] = 1
    with pytest.raises(ParseError) as err:
        parse_document_dict(doc)
    assert "mystery" in str(err.value)


def test_unknown_nested_key_rejected():
    doc = second_noether_ruled(3)
    doc["curves"][0]["color"] = "blue"
    with pytest.raises(ParseError) as err:
        parse_document_dict(doc)
    assert "curves[0]" in err.value.path


def test_dangling_curve_reference_names_the_curve():
    doc = second_noether_ruled(3)
    doc["singularities"][0]["on_curves"] = ["Ghost"]
    with pytest.raises(ParseError) as err:
        parse_document_dict(doc)
    assert "Ghost" in str(err.value)


def test_duplicate_names_rejected():
    doc = second_noether_ruled(3)
    doc["curves"].append(copy.deepcopy(doc["curves"][0]))
    with pytest.raises(ParseError):
        parse_document_dict(doc)
    doc2 = second_noether_ruled(3)
    doc2["singularities"].append(copy.deepcopy(doc2["singularities"][0]))
    with pytest.raises(ParseError):
        parse_document_dict(doc2)


def test_zero_eigenvalue_rejected():
    doc = second_noether_ruled(3)
    doc["singularities"][0]["kind"] = {"eigenvalue": "0"}
    with pytest.raises(ParseError):
        parse_document_dict(doc)


def test_wrong_class_length_rejected():
    doc = second_noether_ruled(3)
    doc["k_foliation"] = ["1"]
    with pytest.raises(ParseError):
        parse_document_dict(doc)


def test_document_requires_content():
    with pytest.raises(ParseError):
        parse_document_dict({"name": "empty"})


def test_report_determinism():
    doc = parse_scenario(json.dumps(slope_12_7()))
    first = run_pipeline(doc)
    second = run_pipeline(doc)
    assert first.to_json() == second.to_json()
    assert first.to_text() == second.to_text()


def test_expectation_mismatch_reported():
    doc = second_noether_ruled(4)
    doc["expect"]["vol"] = "999"
    report = run_pipeline(parse_document_dict(doc))
    assert not report.ok
    assert any("vol" in f for f in report.expectation_failures)


def test_inconsistency_is_surfaced_not_swallowed():
    doc = second_noether_ruled(4)
    # claim a wrong p_g: sections give 4
    doc["metadata"]["p_g"] = 9
    report = run_pipeline(parse_document_dict(doc))
    assert not report.ok
    assert "p_g" in report.inconsistency


def test_json_report_uses_rational_strings_only():
    report = run_pipeline(parse_scenario(json.dumps(second_noether_ruled(5))))
    payload = report.to_json()
    assert '"16/5"' in payload
    assert "0.3" not in payload


def test_parallel_invocations_are_byte_identical():
    from concurrent.futures import ThreadPoolExecutor

    doc = parse_scenario(json.dumps(slope_12_7()))
    with ThreadPoolExecutor(max_workers=8) as pool:
        payloads = list(pool.map(lambda _: run_pipeline(doc).to_json(), range(16)))
    assert len(set(payloads)) == 1
