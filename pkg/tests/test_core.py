#!/usr/bin/env python3
"""
Unit tests for core.py
Tests multiset specs, transpositions, counting and the lexicographic oracle
"""

import unittest
import os
import sys

from hypothesis import given, settings
from hypothesis import strategies as st

# Add parent directory to path for imports
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from multiset_gray.core import (
    GrayTrace,
    MultisetSpec,
    Transposition,
    apply_transposition,
    enumerate_lex,
    format_permutation,
    multinomial_count,
    parse_multiset,
    parse_permutation,
    transposition_between,
)
from multiset_gray.errors import CapExceeded, IndexOutOfRange, InvalidSpec


small_specs = st.lists(st.integers(min_value=1, max_value=3), min_size=1, max_size=4)


class TestMultisetSpec(unittest.TestCase):
    """Test suite for MultisetSpec"""

    def test_sizes(self):
        """Test n and k of a spec"""
        spec = MultisetSpec((2, 2, 2))
        self.assertEqual(spec.n, 6)
        self.assertEqual(spec.k, 3)
        self.assertEqual(str(spec), "2,2,2")

    def test_sorted_start(self):
        """Test the non-decreasing start arrangement"""
        self.assertEqual(MultisetSpec((2, 1, 3)).sorted_start(), (1, 1, 2, 3, 3, 3))

    def test_rejects_empty_and_zero(self):
        """Test invalid multiplicity vectors"""
        with self.assertRaises(InvalidSpec):
            MultisetSpec(())
        with self.assertRaises(InvalidSpec):
            MultisetSpec((2, 0))
        with self.assertRaises(InvalidSpec):
            MultisetSpec((-1,))

    def test_from_mapping(self):
        """Test building from a type -> multiplicity mapping"""
        self.assertEqual(MultisetSpec.from_mapping({2: 1, 1: 2}).multiplicities, (2, 1))
        with self.assertRaises(InvalidSpec):
            MultisetSpec.from_mapping({1: 1, 3: 1})

    def test_parse_multiset(self):
        """Test parsing the comma form"""
        self.assertEqual(parse_multiset("2,2,1,1").multiplicities, (2, 2, 1, 1))
        with self.assertRaises(InvalidSpec):
            parse_multiset("2,x")


class TestCounting(unittest.TestCase):
    """Test suite for multinomial_count and enumerate_lex"""

    def test_known_counts(self):
        """Test multinomial coefficients"""
        self.assertEqual(multinomial_count(MultisetSpec((3, 3))), 20)
        self.assertEqual(multinomial_count(MultisetSpec((2, 2, 2))), 90)
        self.assertEqual(multinomial_count(MultisetSpec((2, 2, 1, 1))), 180)
        self.assertEqual(multinomial_count(MultisetSpec((1, 1, 1, 1))), 24)

    def test_enumerate_small(self):
        """Test the lexicographic listing of 112"""
        self.assertEqual(
            enumerate_lex(MultisetSpec((2, 1))),
            [(1, 1, 2), (1, 2, 1), (2, 1, 1)],
        )

    def test_enumerate_cap(self):
        """Test that the cap is enforced before listing"""
        with self.assertRaises(CapExceeded):
            enumerate_lex(MultisetSpec((2, 2, 2)), cap=10)

    @given(small_specs)
    @settings(max_examples=50, deadline=None)
    def test_lex_is_strictly_increasing(self, mults):
        """Test that the oracle lists every permutation once, in order"""
        spec = MultisetSpec(tuple(mults))
        listing = enumerate_lex(spec)
        self.assertEqual(len(listing), multinomial_count(spec))
        self.assertTrue(all(a < b for a, b in zip(listing, listing[1:])))
        self.assertEqual(listing[0], spec.sorted_start())


class TestTranspositions(unittest.TestCase):
    """Test suite for transpositions"""

    def test_validation(self):
        """Test that degenerate transpositions are rejected"""
        with self.assertRaises(IndexOutOfRange):
            Transposition(2, 2)
        with self.assertRaises(IndexOutOfRange):
            Transposition(0, 1)
        self.assertEqual(Transposition(2, 4).width, 2)
        self.assertEqual(str(Transposition(2, 4)), "(2,4)")

    def test_apply(self):
        """Test applying a transposition to tuples and strings"""
        self.assertEqual(apply_transposition((1, 2, 3), (1, 3)), (3, 2, 1))
        self.assertEqual(apply_transposition(">oo", Transposition(1, 2)), "o>o")
        with self.assertRaises(IndexOutOfRange):
            apply_transposition((1, 2, 3), Transposition(2, 4))

    def test_between(self):
        """Test recovering the transposition between two states"""
        self.assertEqual(transposition_between((1, 1, 2, 2), (1, 2, 1, 2)), Transposition(2, 3))
        self.assertIsNone(transposition_between((1, 1, 0, 0), (0, 0, 1, 1)))
        self.assertIsNone(transposition_between((1, 2), (1, 2)))
        self.assertIsNone(transposition_between((1, 2), (1, 2, 3)))

    @given(small_specs, st.data())
    @settings(max_examples=50, deadline=None)
    def test_between_inverts_apply(self, mults, data):
        """Test that transposition_between recovers an applied swap of distinct values"""
        start = MultisetSpec(tuple(mults)).sorted_start()
        if len(set(start)) < 2:
            return
        i = data.draw(st.integers(min_value=1, max_value=len(start) - 1))
        j = data.draw(st.integers(min_value=i + 1, max_value=len(start)))
        if start[i - 1] == start[j - 1]:
            return
        moved = apply_transposition(start, (i, j))
        self.assertEqual(transposition_between(start, moved), Transposition(i, j))


class TestTraceAndFormatting(unittest.TestCase):
    """Test suite for GrayTrace and permutation text"""

    def test_from_states(self):
        """Test deriving steps and signs from states"""
        trace = GrayTrace.from_states([(1, 1, 2), (1, 2, 1), (2, 1, 1)])
        self.assertEqual(trace.steps, [Transposition(2, 3), Transposition(1, 2)])
        self.assertEqual(trace.signs, [1, -1, 1])
        self.assertEqual(trace.first, (1, 1, 2))
        self.assertEqual(trace.last, (2, 1, 1))
        self.assertEqual(len(trace), 3)

    def test_format_and_parse(self):
        """Test digit and comma forms"""
        self.assertEqual(format_permutation((1, 1, 2, 2, 3, 3)), "112233")
        self.assertEqual(format_permutation((1, 10, 2)), "1,10,2")
        self.assertEqual(parse_permutation("112233"), (1, 1, 2, 2, 3, 3))
        self.assertEqual(parse_permutation("1,10,2"), (1, 10, 2))


if __name__ == '__main__':
    # Run tests with verbose output
    unittest.main(verbosity=2)
