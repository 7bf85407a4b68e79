#!/usr/bin/env python3
"""Tests for strong connections: the exact solver, verification and the maps they induce."""

import unittest

from exceptions import DimensionMismatchError, UnverifiedConnectionError
from piecewise.algebras import function_algebra
from piecewise.hopf import (
    FiniteGroup,
    GSet,
    StrongConnection,
    can_inverse_from_connection,
    colinear_splitting,
    function_comodule_algebra,
    function_comodule_covering,
    group_algebra,
    quotient_connection,
    regular_comodule_algebra,
    regular_connection,
    root_of_unity_smash,
    splittings,
    strong_connection_solve,
    strong_connection_verify,
    translation_map,
    trivial_comodule_algebra,
    verified_connection,
)
from piecewise.linalg import FieldSpec, LinearMap

QQ = FieldSpec.parse("q")
GF5 = FieldSpec.parse("gf5")
GF7 = FieldSpec.parse("gf7")
Z2 = FiniteGroup.cyclic(2)
Z3 = FiniteGroup.cyclic(3)


class TestSolver(unittest.TestCase):
    """Feasibility of the affine system for ℓ."""

    def test_regular_comodule_is_principal(self):
        comodule = regular_comodule_algebra(group_algebra(GF7, Z3))
        result = strong_connection_solve(comodule)
        self.assertTrue(result.feasible)
        self.assertTrue(result.connection.verified)
        self.assertIsNone(result.inconsistent_block)
        self.assertEqual(result.unknowns, 9 * 3)

    def test_free_action_is_principal(self):
        comodule = function_comodule_algebra(GF5, GSet.from_orbits(Z2, free=2))
        result = strong_connection_solve(comodule)
        self.assertTrue(result.feasible)
        self.assertTrue(strong_connection_verify(comodule, result.connection.map).verified)

    def test_fixed_point_fails_at_the_splitting_block(self):
        comodule = function_comodule_algebra(GF5, GSet.from_orbits(Z2, fixed=1))
        result = strong_connection_solve(comodule)
        self.assertFalse(result.feasible)
        self.assertIsNone(result.connection)
        self.assertEqual(result.inconsistent_block, "splitting")

    def test_trivial_coaction_is_not_principal(self):
        comodule = trivial_comodule_algebra(function_algebra(GF5, [1, 2]), group_algebra(GF5, Z2))
        self.assertFalse(strong_connection_solve(comodule).feasible)


class TestVerification(unittest.TestCase):
    """Checking a given ℓ and refusing unverified ones."""

    def setUp(self):
        self.comodule = regular_comodule_algebra(group_algebra(GF5, Z2))

    def test_antipode_formula_is_a_strong_connection(self):
        verdict = strong_connection_verify(self.comodule, regular_connection(self.comodule))
        self.assertTrue(verdict.verified)
        self.assertIsNone(verdict.first_failure)

    def test_zero_map_fails(self):
        verdict = strong_connection_verify(self.comodule, LinearMap.zero(GF5, 4, 2))
        self.assertFalse(verdict.verified)
        self.assertEqual(verdict.first_failure, "unitality")
        with self.assertRaises(UnverifiedConnectionError):
            verified_connection(self.comodule, LinearMap.zero(GF5, 4, 2))

    def test_wrong_shape(self):
        with self.assertRaises(DimensionMismatchError):
            strong_connection_verify(self.comodule, LinearMap.zero(GF5, 2, 2))

    def test_unverified_connection_is_refused_downstream(self):
        claimed = StrongConnection(self.comodule, regular_connection(self.comodule))
        with self.assertRaises(UnverifiedConnectionError):
            can_inverse_from_connection(claimed)


class TestInducedMaps(unittest.TestCase):
    """The inverse of can, the translation map, splittings and quotients."""

    def test_canonical_inverse_and_translation_map(self):
        comodule = function_comodule_algebra(GF5, GSet.from_orbits(Z2, free=2))
        connection = strong_connection_solve(comodule).connection
        self.assertTrue(can_inverse_from_connection(connection).two_sided)
        tau = translation_map(connection)
        self.assertTrue(tau.matches_connection)
        self.assertTrue(tau.splits_canonical)

    def test_splittings_of_a_smash_product(self):
        comodule = root_of_unity_smash(QQ, 2).comodule
        connection = strong_connection_solve(comodule).connection
        checks = splittings(connection).checks()
        failed = [name for name, ok in checks.items() if not ok]
        self.assertEqual(failed, [])

    def test_colinear_splitting_and_quotient_connection(self):
        gset = GSet.from_orbits(Z3, free=2)
        whole, (morphism,) = function_comodule_covering(GF7, gset, [gset.orbit_union([1])])
        connection = strong_connection_solve(whole).connection
        for variant in (0, 1):
            self.assertTrue(colinear_splitting(morphism, connection, variant).verified())
        self.assertTrue(quotient_connection(morphism, connection).verified)


if __name__ == "__main__":
    unittest.main()
