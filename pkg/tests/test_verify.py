"""The verification harness: statuses, determinism, serialisation."""

import json

import pytest

from connsets import ContractViolationError
from connsets.verify import (
    FAIL,
    INFORMATIONAL,
    PASS,
    reports_to_csv,
    verify_closed_forms,
    verify_lemma_algebra,
    verify_maximum,
    verify_minimum,
    verify_tree_bound,
    verify_vertex_bound,
)


def test_minimum_small_orders():
    report = verify_minimum(5)
    assert report.status == PASS
    assert report.observed["min"] == 22
    families = sorted(a["family"] for a in report.attainers)
    assert families == ["A5", "L5"]
    report = verify_minimum(6)
    assert report.status == PASS
    assert [a["family"] for a in report.attainers] == ["L6"]
    with pytest.raises(ContractViolationError):
        verify_minimum(4)


def test_maximum_statuses():
    assert verify_maximum(6).status == INFORMATIONAL
    report = verify_maximum(8)
    assert report.status == PASS
    assert report.observed["max"] == 138
    assert report.observed["second_max"] == 137
    assert [a["family"] for a in report.attainers] == ["B8"]


def test_maximum_informational_reports_observations():
    report = verify_maximum(7)
    assert report.status == INFORMATIONAL
    assert report.observed["max"] == 73
    assert report.observed["second_max"] == 72


def test_vertex_bound_equality_cases():
    report = verify_vertex_bound(4)
    assert report.status == PASS
    assert report.observed["min_rooted"] == 7
    assert report.observed["equality_cases"] == 2
    assert all("degree 2" in note for note in report.notes)
    assert verify_vertex_bound(5).status == PASS
    with pytest.raises(ContractViolationError):
        verify_vertex_bound(10)


def test_closed_forms_sweep():
    report = verify_closed_forms(12)
    assert report.status == PASS
    assert report.observed["mismatches"] == 0


def test_lemma_algebra_seeded():
    report = verify_lemma_algebra(trials=60, seed=9, pendant_trials=30, branch_trials=30)
    assert report.status == PASS
    assert report.observed["failures"] == 0
    assert report.observed["seed"] == 9


def test_tree_bound_sweep():
    report = verify_tree_bound(8)
    assert report.status == PASS


def test_reports_are_deterministic():
    a = verify_minimum(6).to_json()
    b = verify_minimum(6).to_json()
    assert a == b
    x = verify_lemma_algebra(trials=20, seed=5).to_json()
    y = verify_lemma_algebra(trials=20, seed=5).to_json()
    assert x == y


def test_workers_do_not_change_bytes():
    assert verify_minimum(6, workers=2).to_json() == verify_minimum(6).to_json()


def test_json_and_csv_shapes():
    report = verify_minimum(5)
    payload = json.loads(report.to_json())
    assert payload["claim"] == "minimum"
    assert payload["status"] == "pass"
    assert "runtime_seconds" not in payload
    assert "runtime_seconds" in json.loads(report.to_json(include_runtime=True))
    csv_text = reports_to_csv([report, verify_maximum(5)])
    lines = csv_text.strip().splitlines()
    assert lines[0] == "claim,n,expected,observed,status"
    assert len(lines) == 3
    assert lines[1].startswith("minimum,5,")


def test_exhaustiveness_guard_catches_broken_enumeration(monkeypatch):
    import connsets.verify as verify_mod

    monkeypatch.setattr(
        verify_mod, "enumerate_bicyclic", lambda n, cap=None: [] if cap is None else []
    )
    with pytest.raises(ContractViolationError):
        verify_mod.verify_minimum(6)
