#!/usr/bin/env python3
"""Tests for finite groups, Hopf algebras, comodule algebras and smash products."""

import unittest

from exceptions import FormatError, StructureError
from piecewise.algebras import AlgebraMorphism, function_algebra
from piecewise.hopf import (
    ComoduleMorphism,
    FiniteGroup,
    GSet,
    HopfData,
    ModuleAlgebraAction,
    canonical_map,
    coinvariant_surjectivity,
    cyclic_group_ring,
    function_comodule_algebra,
    function_comodule_covering,
    function_hopf_algebra,
    group_algebra,
    is_comodule_ideal,
    regular_comodule_algebra,
    restricted_morphism,
    root_of_unity_smash,
    smash_product,
    trivial_action,
    trivial_comodule_algebra,
    trivial_hopf_algebra,
    verify_trivialization,
)
from piecewise.linalg import FieldSpec, LinearMap

QQ = FieldSpec.parse("q")
GF5 = FieldSpec.parse("gf5")
GF7 = FieldSpec.parse("gf7")
Z2 = FiniteGroup.cyclic(2)
Z3 = FiniteGroup.cyclic(3)


class TestGroups(unittest.TestCase):
    """Products of cyclic groups and G-sets built from orbits."""

    def test_mixed_radix_indexing(self):
        group = FiniteGroup((2, 3))
        self.assertEqual(group.order, 6)
        self.assertEqual(group.element(5), (1, 2))
        self.assertEqual(group.index((1, 2)), 5)
        self.assertEqual(group.multiply(5, 5), group.index((0, 1)))
        self.assertEqual(group.multiply(4, group.inverse(4)), group.identity)
        self.assertEqual(group.label, "Z2xZ3")

    def test_orbits_and_stable_subsets(self):
        gset = GSet.from_orbits(Z2, free=1, fixed=1)
        self.assertEqual(gset.points, ("o0g0", "o0g1", "f0"))
        self.assertEqual(gset.orbits(), [(0, 1), (2,)])
        self.assertFalse(gset.is_free())
        self.assertEqual(len(gset.stable_subsets()), 4)
        self.assertEqual(gset.restrict([2]).points, ("f0",))
        with self.assertRaises(FormatError):
            gset.restrict([0])

    def test_malformed_action_table(self):
        with self.assertRaises(FormatError):
            GSet(Z2, ("a", "b"), ((1, 0), (0, 1)))
        with self.assertRaises(FormatError):
            FiniteGroup(())


class TestHopfAlgebras(unittest.TestCase):
    """Axioms of k[G], k^G and the trivial Hopf algebra."""

    def test_standard_hopf_algebras_satisfy_the_axioms(self):
        for hopf in (group_algebra(GF5, Z2), group_algebra(QQ, FiniteGroup((2, 2))),
                     function_hopf_algebra(GF7, Z3), trivial_hopf_algebra(QQ)):
            self.assertEqual(hopf.axiom_errors(), [], hopf.name)

    def test_broken_antipode_is_reported(self):
        hopf = group_algebra(GF5, Z2)
        broken = HopfData(hopf.algebra, hopf.coproduct, hopf.counit, hopf.antipode.scale(2))
        errors = broken.axiom_errors()
        self.assertIn("left antipode identity fails", errors)
        with self.assertRaises(StructureError):
            broken.validate()

    def test_singular_antipode_is_refused(self):
        hopf = group_algebra(GF5, Z2)
        with self.assertRaises(StructureError):
            HopfData(hopf.algebra, hopf.coproduct, hopf.counit, LinearMap.zero(GF5, 2, 2))


class TestComoduleAlgebras(unittest.TestCase):
    """Coactions, coinvariants, colinear maps and the canonical map."""

    def test_regular_comodule_is_galois_over_the_ground_field(self):
        comodule = regular_comodule_algebra(group_algebra(GF7, Z3))
        self.assertEqual(comodule.axiom_errors(), [])
        self.assertEqual(comodule.coinvariants.dim, 1)
        self.assertTrue(canonical_map(comodule).galois)

    def test_free_orbit_is_galois_and_fixed_point_is_not(self):
        free = function_comodule_algebra(GF5, GSet.from_orbits(Z2, free=1))
        self.assertEqual(free.axiom_errors(), [])
        self.assertEqual(free.coinvariants.dim, 1)
        self.assertTrue(canonical_map(free).galois)
        fixed = function_comodule_algebra(GF5, GSet.from_orbits(Z2, fixed=1))
        self.assertEqual(fixed.coinvariants.dim, 1)
        self.assertFalse(canonical_map(fixed).galois)

    def test_coinvariants_count_orbits(self):
        comodule = function_comodule_algebra(GF7, GSet.from_orbits(Z3, free=2, fixed=1))
        self.assertEqual(comodule.coinvariants.dim, 3)
        self.assertEqual(comodule.coinvariants.algebra.axiom_errors(), [])

    def test_trivial_coaction(self):
        comodule = trivial_comodule_algebra(function_algebra(GF5, [1, 2]), group_algebra(GF5, Z2))
        self.assertEqual(comodule.axiom_errors(), [])
        self.assertEqual(comodule.coinvariants.dim, 2)

    def test_restrictions_to_orbit_unions_are_colinear(self):
        gset = GSet.from_orbits(Z2, free=3)
        whole, morphisms = function_comodule_covering(GF5, gset, [gset.orbit_union([0, 1]), gset.orbit_union([2])])
        for morphism in morphisms:
            self.assertEqual(morphism.colinearity_errors(), [])
            self.assertTrue(morphism.is_surjective())
            self.assertTrue(coinvariant_surjectivity(morphism))
            self.assertTrue(is_comodule_ideal(whole, morphism.kernel()))
            self.assertEqual(restricted_morphism(morphism).axiom_errors(), [])

    def test_evaluation_at_one_point_of_an_orbit_is_not_colinear(self):
        orbit = function_comodule_algebra(GF5, GSet.from_orbits(Z2, free=1))
        point = function_comodule_algebra(GF5, GSet.from_orbits(Z2, fixed=1))
        evaluation = ComoduleMorphism(orbit, point, AlgebraMorphism(orbit.algebra, point.algebra,
                                                                   LinearMap.from_rows(GF5, [[1, 0]])))
        self.assertIn("not colinear", evaluation.colinearity_errors())


class TestSmashProducts(unittest.TestCase):
    """Module algebras and B # H."""

    def test_trivial_action_is_a_module_algebra(self):
        action = trivial_action(function_algebra(QQ, [1, 2]), group_algebra(QQ, Z2))
        self.assertEqual(action.axiom_errors(), [])
        smash = smash_product(action)
        self.assertEqual(smash.comodule.dim, 4)
        self.assertEqual(smash.comodule.coinvariants.dim, 2)

    def test_scaled_action_is_refused(self):
        action = trivial_action(function_algebra(QQ, [1, 2]), group_algebra(QQ, Z2))
        scaled = ModuleAlgebraAction(action.algebra, action.hopf, action.action.scale(2))
        self.assertIn("1_H does not act as the identity", scaled.axiom_errors())
        with self.assertRaises(StructureError):
            smash_product(scaled)

    def test_root_of_unity_smash(self):
        smash = root_of_unity_smash(GF5, 4)
        self.assertEqual(smash.comodule.dim, 16)
        self.assertEqual(smash.comodule.axiom_errors(), [])
        self.assertFalse(smash.comodule.algebra.is_commutative())
        self.assertTrue(cyclic_group_ring(GF5, 4).is_commutative())

    def test_sign_smash_over_the_rationals_is_galois(self):
        smash = root_of_unity_smash(QQ, 2)
        self.assertEqual(smash.comodule.coinvariants.dim, 2)
        self.assertTrue(canonical_map(smash.comodule).galois)

    def test_missing_root_of_unity(self):
        with self.assertRaises(FormatError):
            root_of_unity_smash(QQ, 3)
        with self.assertRaises(FormatError):
            root_of_unity_smash(GF7, 4)

    def test_smash_product_trivializes_itself(self):
        smash = root_of_unity_smash(QQ, 2)
        identity = LinearMap.identity(QQ, smash.comodule.dim)
        self.assertTrue(verify_trivialization(smash.comodule, smash, identity).holds)
        verdict = verify_trivialization(smash.comodule, smash, LinearMap.zero(QQ, 4, 4))
        self.assertFalse(verdict.holds)


if __name__ == "__main__":
    unittest.main()
