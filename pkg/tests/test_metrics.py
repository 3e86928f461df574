#!/usr/bin/env python3
"""
Unit tests for metrics.py
Tests width histograms, total motion and the comparison sweep
"""

import unittest
import os
import sys

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from multiset_gray import config
from multiset_gray.core import GrayTrace
from multiset_gray.errors import CapExceeded, InvalidArgs, MultisetGrayError
from multiset_gray.metrics import (
    CSV_HEADER,
    compare_motion,
    eades_mckay_motion,
    motion_for_algorithm,
    motion_from_widths,
    motion_stats,
    rows_to_csv,
)
from multiset_gray.refgens import eades_mckay


class TestMotion(unittest.TestCase):
    """Test suite for motion statistics"""

    def test_from_widths(self):
        """Test histogram and total of a width list"""
        stats = motion_from_widths([1, 2, 1, 3])
        self.assertEqual(stats.total_motion, 7)
        self.assertEqual(stats.width_histogram, {1: 2, 2: 1, 3: 1})
        self.assertEqual(stats.step_count, 4)
        self.assertEqual(stats.to_lines()[:2], ["W=7", "steps=4"])

    def test_single_state(self):
        """Test that a one-state list has no motion"""
        stats = motion_stats(GrayTrace.from_states([(1, 1)]))
        self.assertEqual(stats.total_motion, 0)
        self.assertEqual(stats.width_histogram, {})

    def test_broken_trace(self):
        """Test that a non-transposition step is reported"""
        with self.assertRaises(MultisetGrayError):
            motion_stats(GrayTrace.from_states([(1, 2, 3), (2, 3, 1)]))

    def test_ours_six_three(self):
        """Test the multiset generator on 111222"""
        stats = motion_for_algorithm(6, 3, "ours")
        self.assertEqual(stats.width_histogram, {1: 15, 2: 4})
        self.assertEqual(stats.total_motion, 23)

    def test_eades_six_three(self):
        """Test E(6,3)"""
        stats = motion_for_algorithm(6, 3, "eades")
        self.assertEqual(stats.width_histogram, {1: 16, 2: 2, 3: 1})
        self.assertEqual(stats.total_motion, 23)

    def test_ruskey_four_two(self):
        """Test C(4,2)"""
        stats = motion_for_algorithm(4, 2, "ruskey")
        self.assertEqual(stats.width_histogram, {1: 3, 2: 1, 3: 1})
        self.assertEqual(stats.total_motion, 8)

    def test_single_one(self):
        """Test that one element walks n - 1 cells"""
        for n in range(2, 10):
            self.assertEqual(motion_for_algorithm(n, 1, "ours").total_motion, n - 1)

    def test_invalid(self):
        """Test unknown algorithms and degenerate k"""
        with self.assertRaises(InvalidArgs):
            motion_for_algorithm(5, 2, "bogus")
        with self.assertRaises(InvalidArgs):
            motion_for_algorithm(5, 0, "ours")
        with self.assertRaises(InvalidArgs):
            motion_for_algorithm(5, 6, "eades")


class TestEadesMcKayMotion(unittest.TestCase):
    """Test suite for the list-free Eades-McKay motion"""

    def test_matches_built_lists(self):
        """Test the recurrence against materialized lists up to n = 10"""
        for n in range(0, 11):
            for k in range(0, n + 1):
                expected = motion_stats(eades_mckay(n, k)).total_motion
                self.assertEqual(eades_mckay_motion(n, k), expected, f"n={n}, k={k}")

    def test_five(self):
        """Test the n = 5 values"""
        self.assertEqual(eades_mckay_motion(5, 2), 12)
        self.assertEqual(eades_mckay_motion(5, 3), 10)


class TestCompare(unittest.TestCase):
    """Test suite for compare_motion"""

    def test_up_to_ten(self):
        """Test that every row up to n = 10 satisfies the expected relations"""
        rows = compare_motion(10)
        self.assertEqual(len(rows), sum(n - 1 for n in range(2, 11)))
        self.assertTrue(all(row.holds for row in rows))

        six_three = next(row for row in rows if (row.n, row.k) == (6, 3))
        self.assertEqual((six_three.W_B, six_three.W_E, six_three.W_E_complement), (23, 23, 23))
        self.assertIsNone(six_three.exp_b)
        self.assertIsNone(six_three.exp_c)

        five_two = next(row for row in rows if (row.n, row.k) == (5, 2))
        self.assertEqual((five_two.W_B, five_two.W_E), (10, 12))
        self.assertTrue(five_two.exp_b)

    def test_edge_rows_have_no_strict_check(self):
        """Test that k = 1 and k = n - 1 skip the strict relations"""
        for row in compare_motion(8):
            if row.k in (1, row.n - 1):
                self.assertIsNone(row.exp_b)
                self.assertIsNone(row.exp_c)
                self.assertEqual(row.W_B, row.n - 1)

    def test_n_min(self):
        """Test a sweep resumed above stored sizes"""
        rows = compare_motion(6, n_min=5)
        self.assertEqual({row.n for row in rows}, {5, 6})

    def test_csv(self):
        """Test the CSV layout"""
        text = rows_to_csv(compare_motion(3))
        lines = text.splitlines()
        self.assertEqual(lines[0], ",".join(CSV_HEADER))
        self.assertEqual(lines[1], "2,1,1,1,1,True,,")
        self.assertEqual(len(lines), 4)

    def test_bounds(self):
        """Test rejected sweeps"""
        with self.assertRaises(InvalidArgs):
            compare_motion(1)
        with self.assertRaises(CapExceeded):
            compare_motion(12, cap=100)

    @unittest.skipUnless(config.SLOW_TESTS, "set MULTISET_GRAY_SLOW_TESTS=1")
    def test_up_to_twenty_parallel(self):
        """Test the sweep up to n = 20 on two worker processes"""
        rows = compare_motion(20, workers=2)
        self.assertEqual(len(rows), sum(n - 1 for n in range(2, 21)))
        self.assertTrue(all(row.holds for row in rows))


if __name__ == '__main__':
    # Run tests with verbose output
    unittest.main(verbosity=2)
