import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path
from unittest import mock

from src.circulant_cdm._SETTINGS import WORKERS_ENV
from src.circulant_cdm.cli import RunConfig, default_workers, main, run_crosscheck

REPO_ROOT = Path(__file__).resolve().parent.parent


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestClassifyCommand(unittest.TestCase):

    def test_figure_instance(self):
        code, out, _ = _run("classify", "--n", "24", "--set", "1,5,12")
        self.assertEqual(code, 0)
        record = json.loads(out)
        self.assertTrue(record["is_cdm"])
        self.assertEqual(record["families"], ["FamilyIV"])
        self.assertEqual(record["parameters"]["t"], 3)
        self.assertEqual(record["parameters"]["k"], 0)

    def test_complete_graph(self):
        code, out, _ = _run("classify", "--n", "4", "--set", "1,2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["families"], ["K4"])

    def test_negative(self):
        code, out, _ = _run("classify", "--n", "10", "--set", "1,3,5")
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(out)["is_cdm"])

    def test_csv(self):
        code, out, _ = _run("classify", "--n", "24", "--set", "1,5,12", "--format", "csv")
        self.assertEqual(code, 0)
        row = next(csv.DictReader(io.StringIO(out)))
        self.assertEqual(row["S"], "1 5 12 19 23")

    def test_malformed_generators(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["classify", "--n", "10", "--set", "1,x"])
        self.assertEqual(ctx.exception.code, 2)

    def test_out_of_range_generator(self):
        code, _, err = _run("classify", "--n", "10", "--set", "0")
        self.assertEqual(code, 2)
        self.assertIn("error", err)

    def test_valency_above_five(self):
        code, _, _ = _run("classify", "--n", "12", "--set", "1,2,3")
        self.assertEqual(code, 2)


class TestLabelCommand(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.temp_dir_path = Path(self.temp_dir.name)

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_family_i(self):
        code, out, _ = _run("label", "--n", "8", "--set", "1,3,4")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["values"], [1, 2, 3, 4, 8, 7, 6, 5])

    def test_negative(self):
        code, out, err = _run("label", "--n", "10", "--set", "1,3,5")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("not closed distance magic", err)

    def test_round_trip_through_verify(self):
        for fmt in ("jsonl", "csv"):
            path = self.temp_dir_path / f"labeling.{fmt}"
            code, _, _ = _run("label", "--n", "24", "--set", "1,5,12", "--format", fmt, "--output", str(path))
            self.assertEqual(code, 0)
            code, out, _ = _run("verify", "--n", "24", "--set", "1,5,12", "--input", str(path))
            self.assertEqual(code, 0)
            record = json.loads(out)
            self.assertTrue(record["accepted"])
            self.assertEqual(record["r"], 75)

    def test_verify_rejects(self):
        path = self.temp_dir_path / "identity.csv"
        path.write_text("vertex,label\n" + "".join(f"{x},{x + 1}\n" for x in range(8)))
        code, out, _ = _run("verify", "--n", "8", "--set", "1,3,4", "--input", str(path))
        self.assertEqual(code, 1)
        self.assertFalse(json.loads(out)["accepted"])

    def test_dot(self):
        code, out, _ = _run("label", "--n", "8", "--set", "1,3,4", "--format", "dot")
        self.assertEqual(code, 0)
        self.assertIn('4 [label="8"];', out)

    def test_family_ii_additive(self):
        code, out, _ = _run("label", "--n", "70", "--set", "1,6,35", "--family-ii", "additive")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["r"], 213)


class TestSpectrumCommand(unittest.TestCase):

    def test_complete_graph(self):
        code, out, _ = _run("spectrum", "--n", "4", "--set", "1,2")
        self.assertEqual(code, 0)
        rows = list(csv.DictReader(io.StringIO(out)))
        self.assertEqual([row["admissible"] for row in rows], ["False", "True", "True", "True"])

    def test_types(self):
        code, out, _ = _run("spectrum", "--n", "24", "--set", "1,5,12", "--format", "jsonl")
        self.assertEqual(code, 0)
        rows = [json.loads(line) for line in out.splitlines()]
        self.assertTrue(rows[3]["admissible"])
        self.assertEqual(rows[3]["types"], ["Type3Minus"])


class TestOracleCommand(unittest.TestCase):

    def test_found(self):
        code, out, _ = _run("oracle", "--n", "4", "--set", "1,2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["status"], "Found")

    def test_infeasible(self):
        code, out, _ = _run("oracle", "--n", "12", "--set", "1,4,6")
        self.assertEqual(code, 1)
        record = json.loads(out)
        self.assertEqual(record["status"], "Infeasible")
        self.assertEqual(record["refusal"], "SeparationGcd(4)")

    def test_max_n_guard(self):
        code, _, _ = _run("oracle", "--n", "40", "--set", "1,3,20")
        self.assertEqual(code, 2)


class TestCrosscheckCommand(unittest.TestCase):

    def setUp(self):
        self.temp_dir = tempfile.TemporaryDirectory()
        self.temp_dir_path = Path(self.temp_dir.name)

    def tearDown(self):
        self.temp_dir.cleanup()

    def test_valency_three(self):
        path = self.temp_dir_path / "crosscheck.csv"
        code, _, err = _run("crosscheck", "--valency", "3", "--max-n", "10", "--workers", "1", "--output", str(path))
        self.assertEqual(code, 0)
        self.assertIn("disagreements=0", err)
        self.assertIn("timeouts=0", err)
        rows = list(csv.DictReader(io.StringIO(path.read_text())))
        self.assertEqual(list(rows[0]), ["n", "S", "classifier_verdict", "oracle_status", "agree", "nodes", "millis"])
        found = [row for row in rows if row["oracle_status"] == "Found"]
        self.assertEqual([row["n"] for row in found], ["4"])

    def test_run_crosscheck_summary(self):
        rows, summary = run_crosscheck(RunConfig(max_n=8, valency=5))
        self.assertEqual(summary["total"], len(rows))
        self.assertEqual(summary["disagreements"], 0)
        self.assertGreaterEqual(summary["cdm"], 2)

    def test_guard(self):
        code, _, _ = _run("crosscheck", "--valency", "5", "--max-n", "40")
        self.assertEqual(code, 2)


class TestRunConfig(unittest.TestCase):

    def test_validation(self):
        for kwargs in ({"workers": 0}, {"timeout_per_instance": 0}, {"valency": 6}, {"output_format": "dot"},
                       {"max_n": 31}):
            with self.assertRaises(ValueError):
                RunConfig(**{"max_n": 10, "valency": 3, **kwargs})

    def test_workers_from_environment(self):
        with mock.patch.dict(os.environ, {WORKERS_ENV: "4"}):
            self.assertEqual(default_workers(), 4)
        with mock.patch.dict(os.environ, {WORKERS_ENV: "many"}):
            with self.assertRaises(ValueError):
                default_workers()


class TestEnumerateCommand(unittest.TestCase):

    def test_jsonl(self):
        code, out, _ = _run("enumerate", "--valency", "3", "--max-n", "6")
        self.assertEqual(code, 0)
        self.assertEqual([json.loads(line)["S"] for line in out.splitlines()], [[1, 2, 3], [1, 3, 5], [2, 3, 4]])

    def test_dot(self):
        code, out, _ = _run("enumerate", "--valency", "3", "--max-n", "6", "--format", "dot")
        self.assertEqual(code, 0)
        self.assertEqual(out.count("graph "), 3)


class TestModuleEntryPoint(unittest.TestCase):

    def test_python_m(self):
        result = subprocess.run([sys.executable, "-m", "src.circulant_cdm", "classify", "--n", "4", "--set", "1,2"],
                                capture_output=True, text=True, cwd=REPO_ROOT)
        self.assertEqual(result.returncode, 0, msg=result.stderr)
        self.assertTrue(json.loads(result.stdout)["is_cdm"])

    def test_exit_code_for_negative(self):
        result = subprocess.run([sys.executable, "-m", "src.circulant_cdm", "label", "--n", "10", "--set", "1,3,5"],
                                capture_output=True, text=True, cwd=REPO_ROOT)
        self.assertEqual(result.returncode, 1)


if __name__ == "__main__":
    unittest.main()
