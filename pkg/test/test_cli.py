import json
import os
import tempfile
from unittest import TestCase

from click.testing import CliRunner

from hochschild.jobs.demos import DEMOS
from run.run_cli import cli


class TestCli(TestCase):

    def setUp(self):
        self.runner = CliRunner(mix_stderr=False)

    def write_spec(self, text):
        handle, path = tempfile.mkstemp(suffix=".json")
        with os.fdopen(handle, "w") as spec_file:
            spec_file.write(text)
        self.addCleanup(os.remove, path)
        return path

    def test_demo_json(self):
        result = self.runner.invoke(cli, ["demo", "E3", "--checks", "bg", "--format", "json"])
        self.assertEqual(result.exit_code, 0, result.stderr)
        report = json.loads(result.stdout)
        self.assertEqual(report["dims"]["bg"], [1, 1, 0, 0, 1, 1, 0])

    def test_demo_table_with_max_degree(self):
        result = self.runner.invoke(cli, ["demo", "E1", "--checks", "bg", "--max-degree", "3"])
        self.assertEqual(result.exit_code, 0, result.stderr)
        self.assertIn("PASS", result.stdout)
        self.assertIn("closed_form", result.stdout)

    def test_unknown_demo(self):
        result = self.runner.invoke(cli, ["demo", "E9"])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("unknown demo", result.stderr)

    def test_unknown_check(self):
        result = self.runner.invoke(cli, ["demo", "E1", "--checks", "bg,tea"])
        self.assertEqual(result.exit_code, 2)

    def test_compute_spec_file(self):
        path = self.write_spec(json.dumps(DEMOS["E2"]))
        result = self.runner.invoke(cli, ["compute", path, "--format", "json"])
        self.assertEqual(result.exit_code, 0, result.stderr)
        report = json.loads(result.stdout)
        self.assertEqual([check["name"] for check in report["checks"]], ["bg", "ring"])
        self.assertEqual(report["dims"]["bg"], [1] * 7)

    def test_bad_spec_files(self):
        malformed = self.write_spec("{\"prime\": ")
        self.assertEqual(self.runner.invoke(cli, ["verify", malformed]).exit_code, 2)
        invalid = self.write_spec(json.dumps(dict(DEMOS["E1"], prime=6)))
        result = self.runner.invoke(cli, ["verify", invalid])
        self.assertEqual(result.exit_code, 2)
        self.assertIn("prime", result.stderr)

    def test_list_demos(self):
        result = self.runner.invoke(cli, ["demos"])
        self.assertEqual(result.exit_code, 0)
        self.assertEqual(len(result.stdout.splitlines()), 5)
        self.assertTrue(result.stdout.startswith("E1  p = 5, n = 2"))
