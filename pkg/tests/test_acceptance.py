"""Acceptance battery: one test per verification criterion.

Runs the full battery once (default height 30, prime bound 10000) and
asserts each check's status and wall-clock budget, so `pytest -v` shows
one pass/fail line per criterion.
"""

import pytest

from gl2tors.verify import run_all


@pytest.fixture(scope="module")
def reports():
    return {r.check_id: r for r in run_all()}


def _require(reports, check_id, status, budget):
    r = reports[check_id]
    assert r.status == status, f"{check_id}: {r.status} ({r.details})"
    assert r.seconds < budget, f"{check_id}: {r.seconds:.1f}s >= {budget}s"


def test_criterion_01_group_orders(reports):
    _require(reports, "group-orders", "pass", 1)


def test_criterion_02_standard_orders(reports):
    _require(reports, "standard-orders", "pass", 10)


def test_criterion_03_index3_bound(reports):
    _require(reports, "index3-bound", "pass", 60)


def test_criterion_04_index6_witnesses(reports):
    _require(reports, "index6-witnesses", "pass", 120)


def test_criterion_05_stable_lines(reports):
    _require(reports, "stable-lines", "pass", 1)


def test_criterion_06_hyperelliptic_cm(reports):
    _require(reports, "hyperelliptic-cm", "evidence-only", 60)


def test_criterion_07_descent_cm(reports):
    _require(reports, "descent-cm", "evidence-only", 60)


def test_criterion_08_fiber_3cs_9b(reports):
    _require(reports, "fiber-3cs-9b", "evidence-only", 600)


def test_criterion_09_fiber_2b_9h(reports):
    _require(reports, "fiber-2b-9h", "evidence-only", 600)


def test_criterion_10_identify_images(reports):
    _require(reports, "identify-images", "pass", 30)


def test_criterion_11_et_family(reports):
    _require(reports, "et-family", "pass", 5)


def test_criterion_12_property_suites(reports):
    _require(reports, "property-suites", "pass", 120)


def test_criterion_13_resultant_evidence(reports):
    _require(reports, "resultant-evidence", "evidence-only", 600)
