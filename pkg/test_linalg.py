#!/usr/bin/env python3
"""Tests for exact fields, linear maps, subspaces and the affine solver."""

import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from exceptions import DimensionMismatchError, FormatError
from piecewise.linalg import (
    AffineSystem,
    CombineMode,
    FieldSpec,
    LinearMap,
    Subspace,
    inverse,
    quotient_with_section,
    right_inverse,
    solve_affine,
    subspace_combine,
    swap,
    tensor,
    tensor_subspace,
    vector_from_strings,
    vector_to_strings,
)

GF5 = FieldSpec.parse("gf5")
QQ = FieldSpec.parse("q")


def small_matrices(rows: int, cols: int):
    return st.lists(st.lists(st.integers(0, 4), min_size=cols, max_size=cols), min_size=rows, max_size=rows)


class TestFieldSpec(unittest.TestCase):
    """Field labels and scalar conversion."""

    def test_labels_round_trip(self):
        self.assertEqual(FieldSpec.parse("q").label, "q")
        self.assertEqual(FieldSpec.parse("GF7").label, "gf7")
        self.assertEqual(FieldSpec.parse("rationals"), QQ)

    def test_rejects_non_prime_and_unknown_labels(self):
        with self.assertRaises(FormatError):
            FieldSpec.parse("gf6")
        with self.assertRaises(FormatError):
            FieldSpec.parse("reals")

    def test_fractions_reduce_in_prime_fields(self):
        gf7 = FieldSpec.parse("gf7")
        self.assertEqual(gf7.to_str(gf7.convert("1/3")), "5")
        self.assertEqual(QQ.to_str(QQ.convert("2/4")), "1/2")

    def test_vanishing_denominator_is_a_format_error(self):
        with self.assertRaises(FormatError):
            GF5.convert("1/5")

    def test_primitive_root_of_unity(self):
        root = GF5.primitive_root_of_unity(4)
        self.assertNotEqual(root ** 2, GF5.one)
        self.assertEqual(root ** 4, GF5.one)
        with self.assertRaises(FormatError):
            QQ.primitive_root_of_unity(4)

    def test_string_vectors(self):
        vector = vector_from_strings(QQ, ["1/2", 3, "-1"])
        self.assertEqual(vector_to_strings(QQ, vector), ["1/2", "3", "-1"])


class TestLinearMap(unittest.TestCase):
    """Composition, rank and kernels."""

    def test_apply_and_compose(self):
        f = LinearMap.from_rows(QQ, [[1, 2], [0, 1]])
        g = LinearMap.from_rows(QQ, [[0, 1], [1, 0]])
        self.assertEqual((f @ g).apply(vector_from_strings(QQ, [1, 0])), vector_from_strings(QQ, [2, 1]))

    def test_shape_mismatch_raises(self):
        f = LinearMap.from_rows(QQ, [[1, 2, 3]])
        with self.assertRaises(DimensionMismatchError):
            f @ f
        with self.assertRaises(FormatError):
            LinearMap.from_rows(QQ, [[1, 2], [3]])

    def test_field_mismatch_raises(self):
        with self.assertRaises(DimensionMismatchError):
            LinearMap.identity(QQ, 2) @ LinearMap.identity(GF5, 2)

    def test_kernel_of_singular_map(self):
        f = LinearMap.from_rows(QQ, [[1, 1], [2, 2]])
        self.assertEqual(f.rank(), 1)
        kernel = f.kernel()
        self.assertEqual(kernel.dim, 1)
        self.assertTrue(kernel.contains(vector_from_strings(QQ, [1, -1])))

    def test_swap_is_an_involution_on_square_spaces(self):
        flip = swap(QQ, 2, 2)
        self.assertEqual(flip @ flip, LinearMap.identity(QQ, 4))

    def test_inverse_and_right_inverse(self):
        f = LinearMap.from_rows(GF5, [[1, 2], [3, 4]])
        self.assertEqual(f @ inverse(f), LinearMap.identity(GF5, 2))
        projection = LinearMap.from_rows(GF5, [[1, 0, 1]])
        section = right_inverse(projection)
        self.assertEqual(projection @ section, LinearMap.identity(GF5, 1))
        self.assertIsNone(inverse(LinearMap.from_rows(GF5, [[1, 1], [1, 1]])))

    @settings(max_examples=30, deadline=None)
    @given(small_matrices(3, 4))
    def test_rank_nullity(self, rows):
        f = LinearMap.from_rows(GF5, rows)
        self.assertEqual(f.rank() + f.kernel().dim, 4)

    @settings(max_examples=20, deadline=None)
    @given(small_matrices(2, 2), small_matrices(2, 2), small_matrices(2, 2), small_matrices(2, 2))
    def test_tensor_is_functorial(self, a, b, c, d):
        fa, fb, fc, fd = (LinearMap.from_rows(GF5, m) for m in (a, b, c, d))
        self.assertEqual(tensor(fa, fb) @ tensor(fc, fd), tensor(fa @ fc, fb @ fd))


class TestSubspaces(unittest.TestCase):
    """Canonical forms, sums, intersections and quotients."""

    def test_equal_spans_compare_equal(self):
        u = Subspace.span(QQ, 3, [[1, 1, 0], [0, 1, 0]])
        v = Subspace.span(QQ, 3, [[1, 0, 0], [2, 3, 0]])
        self.assertEqual(u, v)

    def test_sum_and_intersection_dimensions(self):
        u = Subspace.span(QQ, 3, [[1, 0, 0], [0, 1, 0]])
        v = Subspace.span(QQ, 3, [[0, 1, 0], [0, 0, 1]])
        self.assertEqual(subspace_combine(u, v, CombineMode.SUM).dim, 3)
        meet = subspace_combine(u, v, CombineMode.INTERSECTION)
        self.assertEqual(meet, Subspace.span(QQ, 3, [[0, 1, 0]]))

    def test_quotient_section_lifts_the_unit(self):
        j = Subspace.span(QQ, 3, [[0, 0, 1]])
        unit = vector_from_strings(QQ, [1, 1, 1])
        data = quotient_with_section(3, j, unit=unit)
        self.assertEqual(data.dim, 2)
        self.assertEqual(data.section.apply(data.projection.apply(unit)), unit)
        self.assertEqual(data.projection @ data.section, LinearMap.identity(QQ, 2))

    @settings(max_examples=25, deadline=None)
    @given(small_matrices(2, 3), small_matrices(2, 3))
    def test_modular_dimension_formula(self, a, b):
        u = Subspace.span(GF5, 3, a)
        v = Subspace.span(GF5, 3, b)
        total = subspace_combine(u, v, CombineMode.SUM)
        meet = subspace_combine(u, v, CombineMode.INTERSECTION)
        self.assertEqual(total.dim + meet.dim, u.dim + v.dim)

    @settings(max_examples=25, deadline=None)
    @given(small_matrices(2, 3), small_matrices(2, 3), small_matrices(2, 3))
    def test_sum_and_intersection_are_lattice_operations(self, a, b, c):
        u, v, w = (Subspace.span(GF5, 3, m) for m in (a, b, c))
        for mode in CombineMode:
            self.assertEqual(subspace_combine(u, v, mode), subspace_combine(v, u, mode))
            self.assertEqual(subspace_combine(subspace_combine(u, v, mode), w, mode),
                             subspace_combine(u, subspace_combine(v, w, mode), mode))
            self.assertEqual(subspace_combine(u, u, mode), u)

    @settings(max_examples=25, deadline=None)
    @given(small_matrices(1, 3), small_matrices(1, 3), small_matrices(2, 3))
    def test_modular_law(self, a, b, c):
        w = Subspace.span(GF5, 3, a)
        u = subspace_combine(w, Subspace.span(GF5, 3, b), CombineMode.SUM)
        v = Subspace.span(GF5, 3, c)
        left = subspace_combine(u, subspace_combine(v, w, CombineMode.SUM), CombineMode.INTERSECTION)
        right = subspace_combine(subspace_combine(u, v, CombineMode.INTERSECTION), w, CombineMode.SUM)
        self.assertEqual(left, right)

    def test_three_lines_in_a_plane_are_not_distributive(self):
        u = Subspace.span(QQ, 2, [[1, 0]])
        v = Subspace.span(QQ, 2, [[0, 1]])
        w = Subspace.span(QQ, 2, [[1, 1]])
        left = subspace_combine(u, subspace_combine(v, w, CombineMode.SUM), CombineMode.INTERSECTION)
        right = subspace_combine(subspace_combine(u, v, CombineMode.INTERSECTION),
                                 subspace_combine(u, w, CombineMode.INTERSECTION), CombineMode.SUM)
        self.assertEqual(left, u)
        self.assertTrue(right.is_zero())

    def test_kernels_of_tensor_legs_meet_in_the_tensor_of_kernels(self):
        f = LinearMap.from_rows(QQ, [[1, 1, 1]])
        identity = LinearMap.identity(QQ, 3)
        meet = subspace_combine(tensor(f, identity).kernel(), tensor(identity, f).kernel(), CombineMode.INTERSECTION)
        self.assertEqual(meet, tensor_subspace(f.kernel(), f.kernel()))
        self.assertEqual(meet.dim, 4)


class TestAffineSolver(unittest.TestCase):
    """Exact solves and inconsistent blocks."""

    def test_solve_affine(self):
        a = LinearMap.from_rows(QQ, [[1, 1], [1, -1]])
        solution = solve_affine(a, vector_from_strings(QQ, [3, 1]))
        self.assertEqual(solution, vector_from_strings(QQ, [2, 1]))
        singular = LinearMap.from_rows(QQ, [[1, 1], [1, 1]])
        self.assertIsNone(solve_affine(singular, vector_from_strings(QQ, [1, 2])))

    def test_first_inconsistent_block_is_named(self):
        system = AffineSystem(QQ, 1)
        system.begin_block("first")
        system.add({0: QQ.one}, QQ.one)
        system.begin_block("second")
        system.add({0: QQ.one}, QQ.convert(2))
        self.assertIsNone(system.solve())
        self.assertEqual(system.first_inconsistent_block(), "second")


if __name__ == "__main__":
    unittest.main()
