#!/usr/bin/env python3
"""Tests for structure-constant algebras, ideals, quotients, fibre products and coverings."""

import unittest

from exceptions import DimensionMismatchError, MorphismError, NotAnIdealError, StructureError
from piecewise.algebras import (
    Algebra,
    AlgebraMorphism,
    Ideal,
    covering_check,
    fibre_product,
    function_algebra,
    function_covering,
    ideal_generated,
    induced_quotient_map,
    multi_pullback,
    pairwise_reconstruction,
    quotient_algebra,
    reconstruct,
    restriction,
    square_zero_algebra,
    square_zero_line_quotients,
    surjectivity_criterion,
    tensor_algebra,
    vanishing_ideal,
)
from piecewise.linalg import FieldSpec, LinearMap, Subspace, vector_from_strings

QQ = FieldSpec.parse("q")
GF5 = FieldSpec.parse("gf5")


class TestAlgebra(unittest.TestCase):
    """Axioms of algebras and morphisms."""

    def test_function_algebra_is_commutative_and_unital(self):
        algebra = function_algebra(QQ, ["x", "y", "z"])
        self.assertEqual(algebra.axiom_errors(), [])
        self.assertTrue(algebra.is_commutative())
        self.assertEqual(algebra.unit, vector_from_strings(QQ, [1, 1, 1]))

    def test_non_associative_structure_is_rejected(self):
        with self.assertRaises(StructureError):
            # x·x = y, y·x = x, x·y = 0, so (xx)x differs from x(xx)
            unital = [(0, i, i, 1) for i in range(3)] + [(i, 0, i, 1) for i in (1, 2)]
            Algebra.from_structure(QQ, 3, [1, 0, 0], unital + [(1, 1, 2, 1), (2, 1, 1, 1)])

    def test_wrong_unit_is_reported(self):
        algebra = Algebra.from_structure(QQ, 2, [1, 1], [(0, 0, 0, 1), (1, 1, 1, 1)], validate=False)
        self.assertEqual(algebra.axiom_errors(), [])
        broken = Algebra.from_structure(QQ, 2, [1, 0], [(0, 0, 0, 1), (1, 1, 1, 1)], validate=False)
        self.assertIn("unit is not a left identity", broken.axiom_errors())

    def test_structure_index_out_of_range(self):
        with self.assertRaises(DimensionMismatchError):
            Algebra.from_structure(QQ, 1, [1], [(0, 0, 1, 1)])

    def test_restriction_is_a_morphism(self):
        whole = function_algebra(QQ, [1, 2, 3])
        piece = function_algebra(QQ, [1, 3])
        morphism = restriction(whole, piece)
        self.assertEqual(morphism.axiom_errors(), [])
        self.assertTrue(morphism.is_surjective())
        self.assertEqual(morphism.kernel().dim, 1)

    def test_non_multiplicative_map_fails_validation(self):
        whole = function_algebra(QQ, [1, 2])
        line = function_algebra(QQ, ["pt"])
        summing = AlgebraMorphism(whole, line, LinearMap.from_rows(QQ, [[1, 1]]))
        with self.assertRaises(MorphismError):
            summing.validate()

    def test_tensor_algebra_dimension(self):
        algebra = tensor_algebra(function_algebra(QQ, [1, 2]), square_zero_algebra(QQ, 1))
        self.assertEqual(algebra.dim, 4)
        self.assertEqual(algebra.axiom_errors(), [])


class TestIdealsAndQuotients(unittest.TestCase):
    """Two-sided ideals and P/J."""

    def test_vanishing_ideal_quotient(self):
        algebra = function_algebra(QQ, [1, 2, 3])
        ideal = vanishing_ideal(algebra, [1, 2])
        self.assertTrue(ideal.is_two_sided())
        quotient = quotient_algebra(algebra, ideal)
        self.assertEqual(quotient.algebra.dim, 2)
        self.assertEqual(quotient.algebra.axiom_errors(), [])
        self.assertEqual(quotient.projection.axiom_errors(), [])

    def test_non_ideal_subspace_is_rejected(self):
        algebra = square_zero_algebra(QQ, 1)
        with self.assertRaises(NotAnIdealError):
            Ideal.of(algebra, Subspace.span(QQ, 2, [[1, 1]]))

    def test_generated_ideal_closes_under_products(self):
        algebra = square_zero_algebra(QQ, 2)
        ideal = ideal_generated(algebra, [[0, 1, 0]])
        self.assertEqual(ideal.dim, 1)
        self.assertEqual(ideal_generated(algebra, [[1, 1, 0]]).dim, 3)

    def test_induced_quotient_map(self):
        algebra = function_algebra(QQ, [1, 2, 3])
        small = quotient_algebra(algebra, vanishing_ideal(algebra, [1, 2]))
        smaller = quotient_algebra(algebra, vanishing_ideal(algebra, [1]))
        induced = induced_quotient_map(small, smaller)
        self.assertEqual(induced.axiom_errors(), [])
        with self.assertRaises(DimensionMismatchError):
            induced_quotient_map(smaller, small)


class TestFibreProducts(unittest.TestCase):
    """Pullbacks of algebra maps."""

    def test_fibre_product_of_restrictions(self):
        first = function_algebra(QQ, [1, 2])
        second = function_algebra(QQ, [2, 3])
        overlap = function_algebra(QQ, [2])
        product = fibre_product(restriction(first, overlap), restriction(second, overlap))
        self.assertEqual(product.algebra.dim, 3)
        self.assertEqual(product.algebra.axiom_errors(), [])
        self.assertEqual(product.pr1.axiom_errors(), [])

    def test_fibre_product_needs_common_target(self):
        first = function_algebra(QQ, [1, 2])
        with self.assertRaises(DimensionMismatchError):
            fibre_product(restriction(first, function_algebra(QQ, [1])),
                          restriction(first, function_algebra(QQ, [1, 2])))

    def test_surjectivity_criterion_on_functions(self):
        whole = function_algebra(QQ, [1, 2, 3])
        first, second = function_algebra(QQ, [1, 2]), function_algebra(QQ, [2, 3])
        overlap = function_algebra(QQ, [2])
        certificate = surjectivity_criterion(
            restriction(whole, first), restriction(whole, second),
            restriction(first, overlap), restriction(second, overlap),
        )
        self.assertTrue(certificate.commutes)
        self.assertTrue(certificate.consistent)
        self.assertTrue(certificate.surjective)


class TestCoverings(unittest.TestCase):
    """Covering verdicts and reconstruction."""

    def test_function_covering_is_a_distributive_covering(self):
        algebra, morphisms = function_covering(QQ, [1, 2, 3, 4], [[1, 2], [2, 3], [3, 4, 1]])
        covering = covering_check(algebra, morphisms)
        self.assertTrue(all(covering.surjective))
        self.assertTrue(covering.weak)
        self.assertTrue(covering.distributive)
        self.assertTrue(covering.is_covering)

    def test_missing_point_breaks_weakness(self):
        algebra, morphisms = function_covering(QQ, [1, 2, 3], [[1], [2]])
        self.assertFalse(covering_check(algebra, morphisms).weak)

    def test_square_zero_lines_are_weak_but_not_distributive(self):
        algebra, morphisms = square_zero_line_quotients(QQ)
        covering = covering_check(algebra, morphisms)
        self.assertTrue(covering.weak)
        self.assertTrue(all(covering.surjective))
        self.assertFalse(covering.distributive)
        self.assertIsNotNone(covering.distributivity.witness)
        self.assertFalse(covering.is_covering)

    def test_morphisms_must_start_at_the_covered_algebra(self):
        algebra, morphisms = function_covering(QQ, [1, 2], [[1], [2]])
        other = function_algebra(QQ, [7, 8, 9])
        with self.assertRaises(DimensionMismatchError):
            covering_check(other, morphisms)

    def test_reconstruction_recovers_p(self):
        algebra, morphisms = function_covering(GF5, [1, 2, 3, 4], [[1, 2], [2, 3], [3, 4, 1]])
        covering = covering_check(algebra, morphisms)
        rebuilt = reconstruct(covering)
        self.assertTrue(rebuilt.is_isomorphism)
        self.assertEqual(rebuilt.overlap_dims, (1, 2))
        _, bijective = pairwise_reconstruction(covering)
        self.assertTrue(bijective)

    def test_multi_pullback_of_a_cycle(self):
        pieces = [function_algebra(QQ, [1, 2]), function_algebra(QQ, [2, 3]), function_algebra(QQ, [3, 1])]
        overlaps = {
            (0, 1): (restriction(pieces[0], function_algebra(QQ, [2])), restriction(pieces[1], function_algebra(QQ, [2]))),
            (1, 2): (restriction(pieces[1], function_algebra(QQ, [3])), restriction(pieces[2], function_algebra(QQ, [3]))),
            (0, 2): (restriction(pieces[0], function_algebra(QQ, [1])), restriction(pieces[2], function_algebra(QQ, [1]))),
        }
        pullback = multi_pullback(pieces, overlaps)
        self.assertEqual(pullback.algebra.dim, 3)
        self.assertEqual(len(pullback.projections), 3)
        self.assertTrue(all(p.is_surjective() for p in pullback.projections))
        with self.assertRaises(DimensionMismatchError):
            multi_pullback(pieces[:2], {(0, 1): (restriction(pieces[0], function_algebra(QQ, [2])),
                                                 restriction(pieces[1], pieces[1]))})

    def test_square_zero_lines_still_embed_pairwise(self):
        algebra, morphisms = square_zero_line_quotients(QQ)
        morphism, bijective = pairwise_reconstruction(covering_check(algebra, morphisms))
        self.assertTrue(morphism.is_injective())
        self.assertFalse(bijective)


if __name__ == "__main__":
    unittest.main()
