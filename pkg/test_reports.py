#!/usr/bin/env python3
"""Tests for verdict reports, content hashes and the report store."""

import json
import re
import tempfile
import unittest
from pathlib import Path

from piecewise.reports import Report, ReportStore, compute_content_hash


def sample_report():
    report = Report(command="covering check", field="q", inputs_digest=compute_content_hash({"a": 1}))
    report.add("covering-surjective", True)
    report.add("covering-distributive", False, "190 antichain pairs", {"l1": [[1]], "l2": [[2]], "side": "meet"})
    report.results = {"N": 3}
    return report


class TestReport(unittest.TestCase):
    """Verdict bookkeeping."""

    def test_exit_code_follows_verdicts(self):
        report = sample_report()
        self.assertFalse(report.passed)
        self.assertEqual(report.exit_code, 1)
        self.assertEqual([v.anchor for v in report.failures()], ["covering-distributive"])
        empty = Report(command="data validate", field="q", inputs_digest="sha256:0")
        self.assertEqual(empty.exit_code, 0)

    def test_summary_lines(self):
        lines = sample_report().summary().splitlines()
        self.assertEqual(lines[0], "covering check [q]: FAIL")
        self.assertEqual(lines[1], "  ok   covering-surjective")
        self.assertEqual(lines[2], "  FAIL covering-distributive (190 antichain pairs)")

    def test_json_is_sorted_and_complete(self):
        payload = json.loads(sample_report().to_json())
        self.assertEqual(payload["verdicts"][1]["witness"]["side"], "meet")
        self.assertEqual(payload["results"], {"N": 3})


class TestContentHash(unittest.TestCase):
    """Deterministic digests of canonical JSON."""

    def test_key_order_does_not_matter(self):
        self.assertEqual(compute_content_hash({"a": 1, "b": [1, 2]}), compute_content_hash({"b": [1, 2], "a": 1}))
        self.assertNotEqual(compute_content_hash({"a": 1}), compute_content_hash({"a": 2}))
        self.assertRegex(compute_content_hash([]), r"^sha256:[0-9a-f]{64}$")


class TestReportStore(unittest.TestCase):
    """Run directories under the reports directory."""

    def test_write_and_read(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            store = ReportStore(temp_dir, save_reports=True)
            report = sample_report()
            path = store.write_report(report, run_id="20260101_000000_abcdef12")
            self.assertEqual(path, Path(temp_dir) / "20260101_000000_abcdef12" / "report.json")
            self.assertEqual(store.read_report("20260101_000000_abcdef12"), report)

    def test_disabled_store_writes_nothing(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            store = ReportStore(temp_dir, save_reports=False)
            self.assertIsNone(store.write_report(sample_report()))
            self.assertEqual(list(Path(temp_dir).iterdir()), [])

    def test_run_ids_are_unique(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            store = ReportStore(temp_dir)
            run_id = store.generate_run_id()
            self.assertTrue(re.match(r"^\d{8}_\d{6}_[0-9a-f]{8}$", run_id))
            (Path(temp_dir) / run_id).mkdir()
            self.assertNotEqual(store.generate_run_id(), run_id)


if __name__ == "__main__":
    unittest.main()
