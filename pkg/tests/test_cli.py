#!/usr/bin/env python3
"""
Unit tests for cli.py
Tests each subcommand through main() with output written to a temporary file
"""

import unittest
import os
import sys
import tempfile
import json
from contextlib import redirect_stderr
from io import StringIO

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from multiset_gray.cli import EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE, main


class TestCLI(unittest.TestCase):
    """Test suite for the graycode command line"""

    def setUp(self):
        """Create a temporary output file and database path"""
        self.temp_dir = tempfile.TemporaryDirectory()
        self.out_path = os.path.join(self.temp_dir.name, "out.txt")
        self.db_path = os.path.join(self.temp_dir.name, "experiments.db")

    def tearDown(self):
        """Remove temporary files"""
        self.temp_dir.cleanup()

    def _run(self, *argv):
        code = main(list(argv) + ["-o", self.out_path])
        with open(self.out_path) as f:
            return code, f.read().splitlines()

    def test_enum(self):
        """Test streaming 112233"""
        code, lines = self._run("enum", "--multiset", "2,2,2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(lines), 90)
        self.assertEqual(lines[0], "112233")
        self.assertEqual(lines[-1], "113322")

    def test_enum_trace(self):
        """Test moves and signs"""
        code, lines = self._run("enum", "--multiset", "2,2,2", "--trace", "--limit", "3")
        self.assertEqual(lines, ["112233\t-\t+1", "121233\t(2,3)\t-1", "122133\t(3,4)\t+1"])

    def test_enum_oriented(self):
        """Test the oriented view"""
        code, lines = self._run("enum", "--multiset", "2,2,2", "--oriented", "--limit", "2")
        self.assertEqual(lines, [">>2233", ">2>233"])

    def test_enum_csv_and_json(self):
        """Test the csv and json formats"""
        code, lines = self._run("enum", "--multiset", "1,1", "--format", "csv")
        self.assertEqual(lines, ["index,permutation,move,sign", "1,12,-,+1", "2,21,\"(1,2)\",-1"])

        code, lines = self._run("enum", "--multiset", "1,1", "--format", "json")
        self.assertEqual(json.loads(lines[1]), {"index": 2, "permutation": "21"})

    def test_verify(self):
        """Test the exactly-once report"""
        code, lines = self._run("verify", "--multiset", "2,2,1,1")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("count: 180", lines)
        self.assertIn("passed: True", lines)

    def test_motion(self):
        """Test total motion of 111222"""
        code, lines = self._run("motion", "--n", "6", "--k", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[0], "W=23")

    def test_compare_with_store(self):
        """Test that a stored sweep resumes"""
        code, lines = self._run("compare", "--max-n", "6", "--store", self.db_path)
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[0], "n,k,W_B,W_E,W_E_complement,exp_a,exp_b,exp_c")
        self.assertEqual(len(lines), 1 + 15)

        code, lines = self._run("compare", "--max-n", "7", "--store", self.db_path)
        self.assertEqual(len(lines), 1 + 21)

    def test_graph(self):
        """Test the graph summary and exit code"""
        code, lines = self._run("graph", "--multiset", "2,2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines, ["vertices: 6", "edges: 6", "hamilton_path: False"])

    def test_graph_dot(self):
        """Test DOT output"""
        code, lines = self._run("graph", "--multiset", "1,1", "--dot")
        self.assertIn("graph", lines[0])

    def test_lemma(self):
        """Test the marked combination lemma"""
        code, lines = self._run("lemma", "--n", "7", "--k", "3")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines[-1], "passed: True")

    def test_lemma_four_two(self):
        """Test that C'(4,2) passes and exits 0"""
        code, lines = self._run("lemma", "--n", "4", "--k", "2")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("marked_steps: 3/5", lines)
        self.assertEqual(lines[-1], "passed: True")

    def test_poly_reference(self):
        """Test the reference check for 2,2,2,2"""
        code, lines = self._run("poly", "--check-agaoka")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(lines, ["MATCH (12 terms)"])

    def test_poly_count(self):
        """Test group order and stream length"""
        code, lines = self._run("poly", "--partition", "5,5,5,5,4,4", "--count")
        self.assertEqual(lines, ["vertical_group_order: 6449725440000", "stream_cardinality: 393660000"])

    def test_poly_machine(self):
        """Test one term per line"""
        code, lines = self._run("poly", "--machine")
        self.assertEqual(len(lines), 12)

    def test_invalid_multiset(self):
        """Test that a domain error exits with the usage code"""
        stderr = StringIO()
        with redirect_stderr(stderr):
            code = main(["enum", "--multiset", "2,x", "-o", self.out_path])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("error:", stderr.getvalue())

    def test_cap_exceeded(self):
        """Test that the cap is reported as an error"""
        with redirect_stderr(StringIO()):
            code = main(["verify", "--multiset", "2,2,2", "--cap", "10", "-o", self.out_path])
        self.assertEqual(code, EXIT_USAGE)

    def test_unwritable_output(self):
        """Test that an output path in a missing directory exits with the usage code"""
        missing = os.path.join(self.temp_dir.name, "missing", "out.txt")
        stderr = StringIO()
        with redirect_stderr(stderr):
            code = main(["lemma", "--n", "4", "--k", "2", "-o", missing])
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("error:", stderr.getvalue())
        self.assertFalse(os.path.exists(missing))

    def test_exit_codes_distinct(self):
        """Test the documented exit codes"""
        self.assertEqual((EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE), (0, 1, 2))


if __name__ == '__main__':
    # Run tests with verbose output
    unittest.main(verbosity=2)
