import json
import xml.etree.ElementTree as ET

import pytest

from naring.corpus import (
    list_corpus, run_corpus, aggregate_ok, results_table, junit_xml,
)

MANDATED_IDS = [
    "ex-2.1.2", "ex-2.1.3", "ex-2.2.2", "ex-2.2.3", "ex-2.3.1", "ex-2.3.2",
    "ex-2.4.1", "ex-2.4.2", "ex-2.4.5", "ex-2.4.6", "ex-3.2.1", "ex-3.2.2",
    "ex-3.2.3", "ex-3.4.2", "ex-3.5.4", "ex-3.5.5", "ex-4.2.1",
    "thm-2.2.1", "thm-2.2.2", "thm-2.2.3", "thm-2.2.4", "thm-2.2.5",
    "thm-2.2.6", "thm-2.2.7", "thm-2.2.8", "thm-2.2.9", "thm-2.3.4",
    "thm-2.3.8", "thm-2.3.9", "thm-2.4.16", "thm-2.4.17", "thm-3.2.5",
    "thm-3.3.10", "thm-3.4.8", "thm-4.2.4", "thm-4.2.5",
]


@pytest.fixture(scope="module")
def full_run():
    return run_corpus()


class TestRegistry:
    def test_at_least_25_items(self):
        assert len(list_corpus()) >= 25

    def test_mandated_coverage(self):
        ids = {item.id for item in list_corpus()}
        for wanted in MANDATED_IDS:
            assert wanted in ids, wanted

    def test_unique_ids_and_notes(self):
        items = list_corpus()
        assert len({i.id for i in items}) == len(items)
        for item in items:
            assert item.note
            assert item.expected_status in ("confirmed",
                                            "discrepancy_expected")

    def test_item_json(self):
        doc = list_corpus()[0].to_json()
        for key in ("id", "expected_status", "note"):
            assert key in doc


class TestRun:
    def test_all_match_expected(self, full_run):
        assert len(full_run) == len(list_corpus())
        mismatches = [r.id for r in full_run if not r.matches_expected]
        assert mismatches == []
        assert aggregate_ok(full_run)

    def test_no_errors(self, full_run):
        assert [r.id for r in full_run if r.status == "error"] == []

    def test_sorted_and_deterministic(self, full_run):
        ids = [r.id for r in full_run]
        assert ids == sorted(ids)

    def test_filter_exact(self):
        res = run_corpus("ex-2.1.2")
        assert [r.id for r in res] == ["ex-2.1.2"]
        assert res[0].status == "confirmed"

    def test_filter_glob_and_substring(self):
        glob = {r.id for r in run_corpus("ex-2.1.*")}
        assert glob == {"ex-2.1.2", "ex-2.1.3"}
        sub = {r.id for r in run_corpus("2.4.")}
        assert {"ex-2.4.1", "ex-2.4.2", "ex-2.4.5", "ex-2.4.6"} <= sub

    def test_no_match_returns_empty(self):
        assert run_corpus("no-such-id") == []

    def test_order_independent(self, full_run):
        # rerunning a subset in isolation gives the same statuses
        subset = run_corpus("ex-2.3.*")
        by_id = {r.id: r.status for r in full_run}
        for r in subset:
            assert r.status == by_id[r.id]

    def test_thm_2_2_7_is_documented_discrepancy(self, full_run):
        r = next(x for x in full_run if x.id == "thm-2.2.7")
        assert r.status == "refuted_as_stated"
        assert r.display_status == "discrepancy-documented"
        assert r.status != "confirmed"
        assert r.matches_expected

    def test_expected_discrepancies(self, full_run):
        flagged = {r.id for r in full_run
                   if r.expected_status == "discrepancy_expected"}
        assert {"thm-2.2.7", "thm-3.3.17", "ex-2.2.2", "ex-3.2.3",
                "thm-envelope-72"} == flagged
        for r in full_run:
            if r.id in flagged:
                assert r.status == "refuted_as_stated"

    def test_result_json_roundtrip(self, full_run):
        doc = full_run[0].to_json()
        json.dumps(doc, sort_keys=True)
        for key in ("id", "status", "details", "runtime"):
            assert key in doc


class TestOutputs:
    def test_table_footer(self, full_run):
        text = results_table(full_run)
        n = len(full_run)
        assert f"{n}/{n} items match their expected status" in text
        for r in full_run:
            assert r.id in text

    def test_junit_well_formed(self, full_run):
        root = ET.fromstring(junit_xml(full_run))
        assert root.tag == "testsuite"
        assert int(root.get("tests")) == len(full_run)
        assert int(root.get("failures")) == 0

    def test_junit_flags_mismatch(self, full_run):
        # forge one mismatch and check the failure node appears
        forged = list(full_run)
        victim = forged[0]
        victim = type(victim)(victim.id, "refuted_as_stated"
                              if victim.status == "confirmed" else "confirmed",
                              victim.details, victim.runtime,
                              victim.expected_status)
        forged[0] = victim
        root = ET.fromstring(junit_xml(forged))
        assert int(root.get("failures")) == 1
