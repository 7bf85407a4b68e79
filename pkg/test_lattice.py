#!/usr/bin/env python3
"""Tests for antichain arithmetic, the L/R presentation maps and distributivity."""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import CapExceededError, FormatError
from piecewise.algebras import ideal_oracle, square_zero_algebra
from piecewise.lattice import (
    Antichain,
    L_map,
    R_map,
    Side,
    antichain_join,
    antichain_meet,
    count_antichains,
    distributivity_check,
    enumerate_antichains,
    min_antichain,
    order_consistent,
    upper_set,
)
from piecewise.linalg import FieldSpec, Subspace
from piecewise.topology import open_set_oracle

QQ = FieldSpec.parse("q")
ANTICHAINS_3 = enumerate_antichains(3)


class TestAntichains(unittest.TestCase):
    """Canonical antichains of nonempty subsets."""

    def test_counts_for_small_n(self):
        self.assertEqual([count_antichains(n) for n in (1, 2, 3, 4)], [2, 5, 19, 167])
        self.assertEqual(len(ANTICHAINS_3), 19)
        self.assertEqual(len(set(ANTICHAINS_3)), 19)

    def test_empty_antichain_comes_first(self):
        self.assertTrue(ANTICHAINS_3[0].is_empty())

    def test_comparable_members_are_rejected(self):
        with self.assertRaises(FormatError):
            Antichain.of(3, [[1], [1, 2]])
        with self.assertRaises(FormatError):
            Antichain.of(2, [[3]])

    def test_min_antichain_keeps_minimal_members(self):
        self.assertEqual(min_antichain(3, [[1, 2], [1], [2, 3]]).to_json(), [[1], [2, 3]])

    def test_key_format(self):
        self.assertEqual(Antichain.of(3, [[2, 3], [1]]).key, "[[1],[2,3]]")
        self.assertEqual(Antichain.empty(3).key, "[]")

    def test_meet_and_join(self):
        a = Antichain.of(3, [[1]])
        b = Antichain.of(3, [[2]])
        self.assertEqual(antichain_meet(a, b).to_json(), [[1, 2]])
        self.assertEqual(antichain_join(a, b).to_json(), [[1], [2]])

    def test_cap_is_enforced(self):
        with self.assertRaises(CapExceededError):
            enumerate_antichains(4, cap=3)
        with self.assertRaises(FormatError):
            enumerate_antichains(0)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(ANTICHAINS_3), st.sampled_from(ANTICHAINS_3))
    def test_meet_and_join_match_upper_sets(self, a, b):
        self.assertEqual(upper_set(antichain_meet(a, b)), upper_set(a) & upper_set(b))
        self.assertEqual(upper_set(antichain_join(a, b)), upper_set(a) | upper_set(b))


class TestPresentation(unittest.TestCase):
    """L and R over the open-set lattice and over a lattice of subspaces."""

    def test_l_inverts_r_on_open_sets(self):
        oracle = open_set_oracle(3)
        for antichain in ANTICHAINS_3:
            self.assertEqual(L_map(oracle, R_map(oracle, antichain)), antichain)

    def test_open_sets_are_distributive(self):
        verdict = distributivity_check(open_set_oracle(3))
        self.assertTrue(verdict.distributive)
        self.assertIsNone(verdict.witness)
        self.assertEqual(verdict.pairs_checked, 19 * 20 // 2)

    def test_three_lines_in_a_plane_are_not_distributive(self):
        algebra = square_zero_algebra(QQ, 2)
        lines = [Subspace.span(QQ, 3, [v]) for v in ([0, 1, 0], [0, 0, 1], [0, 1, 1])]
        verdict = distributivity_check(ideal_oracle(algebra, lines))
        self.assertFalse(verdict.distributive)
        self.assertIn(verdict.witness.side, (Side.MEET, Side.JOIN))
        self.assertEqual(set(verdict.witness.to_json()), {"l1", "l2", "side"})

    def test_order_is_consistent_with_meet(self):
        oracle = open_set_oracle(2)
        first, second = oracle.generators
        self.assertTrue(order_consistent(oracle, first, second))
        self.assertTrue(order_consistent(oracle, oracle.meet(first, second), first))


if __name__ == "__main__":
    unittest.main()
