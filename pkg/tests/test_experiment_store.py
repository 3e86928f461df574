#!/usr/bin/env python3
"""
Unit tests for experiment_store.py
Tests saving, loading and resuming motion comparison rows
"""

import unittest
import os
import sys
import tempfile

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from multiset_gray.experiment_store import ExperimentStore
from multiset_gray.metrics import comparison_row, compare_motion


class TestExperimentStore(unittest.TestCase):
    """Test suite for ExperimentStore class"""

    def setUp(self):
        """Create temporary database for each test"""
        self.temp_db = tempfile.NamedTemporaryFile(suffix=".db", delete=False)
        self.db_path = self.temp_db.name
        self.temp_db.close()
        self.store = ExperimentStore(self.db_path)

    def tearDown(self):
        """Clean up after each test"""
        self.store.close()
        if os.path.exists(self.db_path):
            os.unlink(self.db_path)

    def test_init(self):
        """Test store initialization"""
        self.assertIsNotNone(self.store.conn)
        self.assertEqual(self.store.row_count(), 0)

    def test_save_and_load(self):
        """Test a round trip of computed rows"""
        rows = compare_motion(6)
        self.assertEqual(self.store.save_rows(rows), len(rows))
        self.assertEqual(self.store.load_rows(), rows)

    def test_optional_flags_survive(self):
        """Test that unchecked relations load back as None"""
        row = comparison_row(6, 3, 23, 23, 23)
        self.store.save_rows([row])
        loaded = self.store.load_rows()[0]
        self.assertIsNone(loaded.exp_b)
        self.assertIsNone(loaded.exp_c)
        self.assertTrue(loaded.exp_a)

    def test_load_up_to(self):
        """Test loading only small n"""
        self.store.save_rows(compare_motion(5))
        self.assertEqual([(r.n, r.k) for r in self.store.load_rows(3)], [(2, 1), (3, 1), (3, 2)])

    def test_save_replaces(self):
        """Test that saving a cell again replaces it"""
        self.store.save_rows([comparison_row(5, 2, 10, 12, 10)])
        self.store.save_rows([comparison_row(5, 2, 11, 12, 10)])
        self.assertEqual(self.store.row_count(), 1)
        self.assertEqual(self.store.load_rows()[0].W_B, 11)

    def test_completed_sizes(self):
        """Test that partially stored sizes are not reported complete"""
        self.store.save_rows(compare_motion(4))
        self.store.save_rows([comparison_row(5, 2, 10, 12, 10)])
        self.assertEqual(self.store.completed_sizes(), {2, 3, 4})

    def test_clear(self):
        """Test deleting every row"""
        self.store.save_rows(compare_motion(4))
        self.assertEqual(self.store.clear(), 6)
        self.assertEqual(self.store.row_count(), 0)

    def test_persistence(self):
        """Test that rows survive reopening the database"""
        self.store.save_rows(compare_motion(4))
        self.store.close()

        self.store = ExperimentStore(self.db_path)
        self.assertEqual(self.store.row_count(), 6)

    def test_memory_store(self):
        """Test an in-memory database as a context manager"""
        with ExperimentStore(":memory:") as store:
            store.save_rows(compare_motion(3))
            self.assertEqual(store.row_count(), 3)


if __name__ == '__main__':
    # Run tests with verbose output
    unittest.main(verbosity=2)
