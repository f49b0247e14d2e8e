import json
import time
from unittest import TestCase

from hochschild.constants import Constants
from hochschild.enums.check_name import CheckName
from hochschild.enums.check_status import CheckStatus
from hochschild.enums.output_format import OutputFormat
from hochschild.jobs.checks import JobContext
from hochschild.jobs.demos import demo_spec
from hochschild.jobs.report import Report
from hochschild.jobs.report_formatter import format_report, format_table
from run.job_runner import JobRunner, run_job


class TestRunJob(TestCase):

    def test_bg_only(self):
        report = run_job(demo_spec("E3").with_overrides(checks=[CheckName.BG]))
        self.assertEqual(report.dims["bg"], [1, 1, 0, 0, 1, 1, 0])
        self.assertEqual(report.dims["closed_form"], report.dims["bg"])
        self.assertEqual(list(report.dims), ["closed_form", "bg"])
        self.assertEqual(report.check(CheckName.BG).status, CheckStatus.PASS)
        self.assertIsNone(report.ring)
        self.assertEqual(report.exit_code, 0)

    def test_sweedler_full_suite(self):
        report = run_job(demo_spec("E1"))
        self.assertEqual([check.name for check in report.checks], list(CheckName))
        for check in report.checks:
            self.assertEqual(check.status, CheckStatus.PASS, check.detail)
        self.assertEqual(report.exit_code, 0)
        for route in ["bg", "ext_d", "invariant", "bar", "adjoint", "hopf_hochschild"]:
            dims = report.dims[route]
            self.assertEqual(dims, [1] * len(dims), route)
        self.assertEqual(report.ring["deg_y"], 2)
        self.assertIn("sign_convention", report.extras)
        self.assertFalse(report.extras["center_discrepancy"])

    def test_report_is_deterministic(self):
        spec = demo_spec("E2").with_overrides(checks=[CheckName.BG, CheckName.RING])
        first = run_job(spec).to_json(include_timings=False)
        second = run_job(spec).to_json(include_timings=False)
        self.assertEqual(first, second)
        self.assertNotIn("timings", json.loads(first))

    def test_bar_skipped_when_too_large(self):
        report = run_job(demo_spec("E4").with_overrides(checks=[CheckName.BAR]))
        result = report.check(CheckName.BAR)
        self.assertEqual(result.status, CheckStatus.SKIPPED)
        self.assertTrue(result.detail.startswith("BudgetExceeded"))
        self.assertEqual(report.dims["bar"], [3])
        self.assertEqual(report.exit_code, 0)

    def test_timings(self):
        report = run_job(demo_spec("E1").with_overrides(checks=[CheckName.GAMMA]))
        self.assertIn("total", report.timings)
        self.assertIn("gamma", report.timings)
        self.assertIn("timings", report.to_dict())

    def test_demo_runtime_bounds(self):
        for name, bound in [("E1", 10.0), ("E2", 30.0), ("E3", 60.0)]:
            start = time.perf_counter()
            report = run_job(demo_spec(name))
            elapsed = time.perf_counter() - start
            self.assertEqual(report.exit_code, 0, name)
            self.assertLess(elapsed, bound, name)


class TestJobContext(TestCase):

    def test_d_subalgebra_is_built_once(self):
        spec = demo_spec("E1").with_overrides(checks=[CheckName.GAMMA])
        context = JobContext(spec, Report(spec.to_dict(), spec.data.describe()))
        first = context.d_subalgebra()
        self.assertIs(context.d_subalgebra(), first)
        self.assertEqual(first[0].dim, 8)
        self.assertEqual(first[1].shape, (8, 16))
        self.assertIs(context.iso(), context.iso())


class TestJobRunner(TestCase):

    def test_singleton_keeps_reports(self):
        runner = JobRunner()
        self.assertIs(runner, JobRunner())
        job_id, report = runner.run(demo_spec("E1").with_overrides(checks=[CheckName.BG]))
        self.assertEqual(len(job_id), Constants.JOB_ID_LENGTH)
        self.assertIs(JobRunner().get_report(job_id), report)
        self.assertIn(job_id, runner.get_finished_jobs())
        self.assertIsNone(runner.get_report("unknown"))


class TestReportFormatter(TestCase):

    def setUp(self):
        self.report = run_job(demo_spec("E1").with_overrides(checks=[CheckName.BG, CheckName.RING]))

    def test_table(self):
        table = format_table(self.report, color=False)
        self.assertTrue(table.startswith("p = 5, n = 2, |G| = 2"))
        self.assertIn("PASS", table)
        self.assertIn("deg y = 2", table)
        self.assertNotIn("\x1b[", table)

    def test_json(self):
        parsed = json.loads(format_report(self.report, OutputFormat.JSON))
        self.assertEqual(parsed["dims"]["bg"], [1] * 7)
        self.assertEqual([check["status"] for check in parsed["checks"]], ["PASS", "PASS"])
