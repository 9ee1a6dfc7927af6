import json

import pytest

from hyperspinors.engines.audit import (
    EXACT,
    MISMATCH,
    AuditReport,
    build_corpus,
    identity_audit,
    is_derived,
)
from hyperspinors.errors import IndexOutOfRange
from hyperspinors.spinors import spinor

HOLDS = [
    "th-2(a)", "th-2(b)", "th-2(c)", "th-2(d)", "th-2(e)", "th-2(f)",
    "th-3(a)", "th-3(b)", "th-3(c)", "th-3(d)",
    "th-4(a)", "th-4(b)", "th-4(c)", "th-4(d)",
    "th-5(a)", "th-5(b)", "th-5-1(a)", "th-5-1(b)",
]


@pytest.fixture(scope="module")
def report():
    return identity_audit(64)


def test_ids_unique_and_complete(report):
    ids = report.ids()
    assert len(ids) == len(set(ids))
    assert ids == [i.id for i in build_corpus()]
    families = {i.split("(")[0] for i in ids}
    for family in ("th-2", "th-3", "th-4", "th-5", "th-5-1", "th-6", "th-6-1", "th-7", "th-8-1", "th-8-2", "th-8"):
        assert family in families
    assert "th-6-1(d)" in ids and "th-6-1(d)/as-difference" in ids


@pytest.mark.parametrize("identity", HOLDS)
def test_stable_identities_hold(report, identity):
    assert report[identity].verdict == EXACT


def test_th3a_and_summation_examples(report):
    assert report["th-3(a)"].verdict == EXACT
    assert report["sum(a)-psi"].verdict == EXACT
    assert (report["sum(a)-psi"].lo, report["sum(a)-psi"].hi) == (0, 64)


def test_th6a_counterexample(report):
    entry = report["th-6(a)"]
    assert entry.verdict == MISMATCH
    ce = entry.counterexample
    assert ce.n == 0
    assert ce.lhs == spinor(2, -4, 0, -2)
    assert ce.rhs == spinor(2, -4, 0, 2)


def test_printed_mismatches_are_surfaced(report):
    bad = report.mismatches(printed_only=True)
    assert len(bad) >= 10
    assert all(e.counterexample is not None for e in bad)
    assert all(not is_derived(e.id) for e in bad)


def test_derived_corrections_hold(report):
    for entry in report.entries:
        if is_derived(entry.id):
            assert entry.verdict == EXACT, entry.id


def test_index_ranges(report):
    assert report["th-5-1(a)"].lo == 1
    assert report["th-8-1(c)"].lo == 1
    assert report["relation(a)"].lo == 5
    assert report["relation(b)"].lo == 3
    assert (report["initial(psi)"].lo, report["initial(psi)"].hi) == (0, 2)


def test_deterministic_and_json_round_trip(report):
    again = identity_audit(64)
    assert again.dumps() == report.dumps()
    data = json.loads(report.dumps())
    assert set(data) == {"identities"}
    for item in data["identities"]:
        assert set(item) == {"id", "range", "verdict", "counterexample"}
        assert item["verdict"] in ("exact", "mismatch")
        assert (item["counterexample"] is None) == (item["verdict"] == "exact")
    assert AuditReport.from_json(data).to_json() == report.to_json()


def test_n_max_precondition():
    with pytest.raises(IndexOutOfRange):
        identity_audit(4)
    assert identity_audit(5)["th-3(a)"].hi == 5
