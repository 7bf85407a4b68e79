#!/usr/bin/env python3
"""Tests for flabby sheaves of algebras and their equivalence with coverings."""

import unittest

from exceptions import CapExceededError, FormatError, NonDistributiveCoveringError, PreconditionError
from piecewise.algebras import (
    AlgebraMorphism,
    covering_check,
    function_algebra,
    function_covering,
    induced_quotient_map,
    restriction,
    square_zero_line_quotients,
)
from piecewise.io import DATA_DIR, build_covering, load_document
from piecewise.linalg import FieldSpec, LinearMap
from piecewise.sheaves import (
    SheafData,
    basis_cover,
    from_covering,
    function_sheaf,
    irredundant_covers,
    kernel_lattice_check,
    morphism_from_covering_morphism,
    roundtrip_check,
    roundtrip_covering,
    roundtrip_sheaf,
    to_covering,
    verify_flabby,
    verify_sheaf_axiom,
)
from piecewise.topology import CoveredSet, OpenSet, subbasic

QQ = FieldSpec.parse("q")


def three_point_covering():
    algebra, morphisms = function_covering(QQ, [1, 2, 3], [[1, 2], [2, 3]])
    return covering_check(algebra, morphisms)


def pullback_map(source, target, point_map=None):
    """f ↦ f∘φ for function algebras, where φ sends each target label to a source label."""
    point_map = point_map or {}
    entries = {}
    for row, label in enumerate(target.labels):
        image = label if label in source.labels else point_map[label]
        entries[row] = {source.labels.index(image): QQ.one}
    return AlgebraMorphism(source, target, LinearMap.from_entries(QQ, target.dim, source.dim, entries))


def relabelled_sheaf(carriers, point_map):
    """Function algebras on the open sets of N=2 with pullback restrictions."""
    algebras = {
        OpenSet.empty(2): function_algebra(QQ, []),
        subbasic(1, 2).intersection(subbasic(2, 2)): function_algebra(QQ, carriers["both"]),
        subbasic(1, 2): function_algebra(QQ, carriers["first"]),
        subbasic(2, 2): function_algebra(QQ, carriers["second"]),
        OpenSet.whole(2): function_algebra(QQ, carriers["whole"]),
    }
    return SheafData.build(2, algebras.__getitem__,
                           lambda big, small: pullback_map(algebras[big], algebras[small], point_map))


class TestFunctionSheaf(unittest.TestCase):
    """Functions pushed forward along the signature embedding."""

    def setUp(self):
        self.sheaf = function_sheaf(QQ, CoveredSet.of([1, 2, 3], [[1, 2], [2, 3]]))

    def test_sections(self):
        self.assertEqual(len(self.sheaf.open_sets), 5)
        self.assertEqual(self.sheaf.global_sections().dim, 3)
        self.assertEqual(self.sheaf.section(subbasic(1, 2)).labels, (1, 2))
        self.assertEqual(self.sheaf.section(OpenSet.empty(2)).dim, 0)
        self.assertEqual(self.sheaf.structure_errors(), [])

    def test_flabby_and_glues(self):
        self.assertTrue(verify_flabby(self.sheaf).flabby)
        basis = verify_sheaf_axiom(self.sheaf, "basis")
        self.assertTrue(basis.holds)
        self.assertEqual(basis.covers_checked, 5)
        self.assertTrue(verify_sheaf_axiom(self.sheaf, "all").holds)
        self.assertTrue(kernel_lattice_check(self.sheaf).holds)

    def test_basis_cover_of_whole_space(self):
        self.assertEqual(basis_cover(OpenSet.whole(2)), [subbasic(1, 2), subbasic(2, 2)])

    def test_irredundant_covers_of_whole_space(self):
        nonempty = [u for u in self.sheaf.open_sets if not u.is_empty()]
        covers = list(irredundant_covers(OpenSet.whole(2), nonempty))
        self.assertIn([OpenSet.whole(2)], covers)
        self.assertTrue(all(len(cover) <= 2 for cover in covers))

    def test_broken_restriction_is_reported(self):
        whole, first = self.sheaf.whole, subbasic(1, 2)
        swapped = AlgebraMorphism(self.sheaf.section(whole), self.sheaf.section(first),
                                  LinearMap.from_rows(QQ, [[0, 1, 0], [1, 0, 0]]))
        self.sheaf.restrictions[(whole.antichain, first.antichain)] = swapped
        errors = self.sheaf.structure_errors()
        self.assertTrue(any("do not compose" in e for e in errors))

    def test_mode_checks(self):
        with self.assertRaises(FormatError):
            verify_sheaf_axiom(self.sheaf, "some")
        with self.assertRaises(CapExceededError):
            verify_sheaf_axiom(self.sheaf, "all", max_n=1)


class TestFailingPresheaves(unittest.TestCase):
    """Presheaves that break flabbiness or the gluing axiom, with their witnesses."""

    def test_enlarged_section_is_not_flabby(self):
        sheaf = relabelled_sheaf(
            {"whole": [1, 2, 3], "first": [1, 2, "x"], "second": [2, 3], "both": [2]}, {"x": 2})
        self.assertEqual(sheaf.structure_errors(), [])
        verdict = verify_flabby(sheaf)
        self.assertFalse(verdict.flabby)
        self.assertEqual(verdict.witness, (OpenSet.whole(2), subbasic(1, 2)))
        self.assertEqual(verdict.witness_json(),
                         {"from": OpenSet.whole(2).to_json(), "to": subbasic(1, 2).to_json()})

    def test_proper_subalgebra_on_top_fails_existence(self):
        sheaf = relabelled_sheaf(
            {"whole": ["a", "b"], "first": [1, 2], "second": [2, 3], "both": [2]}, {1: "a", 2: "b", 3: "a"})
        self.assertEqual(sheaf.structure_errors(), [])
        self.assertTrue(verify_flabby(sheaf).flabby)
        verdict = verify_sheaf_axiom(sheaf, "basis")
        self.assertFalse(verdict.holds)
        self.assertEqual(verdict.witness["failure"], "existence")
        self.assertEqual(verdict.witness["open"], OpenSet.whole(2).to_json())


class TestCoveringEquivalence(unittest.TestCase):
    """Covering -> sheaf -> covering and back."""

    def test_sheaf_of_a_covering(self):
        sheaf = from_covering(three_point_covering())
        self.assertEqual([sheaf.section(u).dim for u in sheaf.open_sets], [0, 1, 2, 2, 3])
        self.assertTrue(verify_flabby(sheaf).flabby)
        self.assertTrue(verify_sheaf_axiom(sheaf, "all").holds)

    def test_round_trips(self):
        covering = three_point_covering()
        self.assertTrue(roundtrip_covering(covering).holds)
        sheaf = function_sheaf(QQ, CoveredSet.of([1, 2, 3, 4], [[1, 2], [2, 3], [3, 4, 1]]))
        verdict = roundtrip_sheaf(sheaf)
        self.assertTrue(verdict.holds, verdict.failures)
        self.assertTrue(roundtrip_check(covering).holds)
        with self.assertRaises(TypeError):
            roundtrip_check("not a covering")

    def test_to_covering_uses_subbasic_restrictions(self):
        covering = to_covering(from_covering(three_point_covering()))
        self.assertEqual([m.target.dim for m in covering.morphisms], [2, 2])
        self.assertTrue(covering.is_covering)

    def test_non_distributive_covering_has_no_sheaf(self):
        algebra, morphisms = square_zero_line_quotients(QQ)
        covering = covering_check(algebra, morphisms)
        with self.assertRaises(NonDistributiveCoveringError):
            from_covering(covering)
        presheaf = SheafData.build(
            covering.n,
            lambda u: covering.quotient_at(u).algebra,
            lambda big, small: induced_quotient_map(covering.quotient_at(big), covering.quotient_at(small)),
        )
        self.assertTrue(verify_flabby(presheaf).flabby)
        self.assertFalse(verify_sheaf_axiom(presheaf, "basis").holds)

    def test_identity_map_of_coverings_is_natural(self):
        covering = three_point_covering()
        pieces = [AlgebraMorphism.identity(m.target) for m in covering.morphisms]
        morphism = morphism_from_covering_morphism(covering, covering, AlgebraMorphism.identity(covering.algebra),
                                                   pieces)
        self.assertTrue(morphism.is_natural())

    def test_bundled_four_point_covering(self):
        algebra, morphisms = build_covering(load_document(DATA_DIR / "fun4_three_covers.json"))
        covering = covering_check(algebra, morphisms)
        sheaf = from_covering(covering)
        self.assertEqual(sheaf.n, 3)
        basis = verify_sheaf_axiom(sheaf, "basis")
        every = verify_sheaf_axiom(sheaf, "all")
        self.assertTrue(basis.holds)
        self.assertTrue(every.holds)
        self.assertGreater(every.covers_checked, basis.covers_checked)
        verdict = roundtrip_covering(covering)
        self.assertTrue(verdict.holds, verdict.failures)

    def test_quotient_map_of_coverings(self):
        source = covering_check(*function_covering(QQ, [1, 2, 3], [[1, 2], [2, 3]]))
        target = covering_check(*function_covering(QQ, [1, 2], [[1, 2], [2]]))
        xi = restriction(source.algebra, target.algebra)
        pieces = [restriction(p.target, q.target) for p, q in zip(source.morphisms, target.morphisms)]
        morphism = morphism_from_covering_morphism(source, target, xi, pieces)
        self.assertTrue(morphism.is_natural())
        self.assertTrue(morphism.component(OpenSet.whole(2)).matrix.is_surjective())

    def test_inclusion_map_of_coverings(self):
        point_map = {1: "a", 2: "b", 3: "b"}
        source = covering_check(*function_covering(QQ, ["a", "b"], [["a", "b"], ["b"]]))
        target = covering_check(*function_covering(QQ, [1, 2, 3], [[1, 2, 3], [2, 3]]))
        xi = pullback_map(source.algebra, target.algebra, point_map)
        pieces = [pullback_map(p.target, q.target, point_map) for p, q in zip(source.morphisms, target.morphisms)]
        morphism = morphism_from_covering_morphism(source, target, xi, pieces)
        self.assertTrue(morphism.is_natural())
        self.assertTrue(morphism.component(OpenSet.whole(2)).matrix.is_injective())

    def test_sheaf_needs_a_covering(self):
        whole = function_algebra(QQ, [1, 2, 3])
        pieces = [function_algebra(QQ, [1, 2]), function_algebra(QQ, [2])]
        point_lost = covering_check(whole, [restriction(whole, piece) for piece in pieces])
        self.assertFalse(point_lost.weak)
        with self.assertRaises(PreconditionError):
            from_covering(point_lost)
        pair = function_algebra(QQ, [1, 2])
        widened = function_algebra(QQ, [1, 2, "x"])
        not_onto = covering_check(pair, [pullback_map(pair, widened, {"x": 2}),
                                         restriction(pair, function_algebra(QQ, [2]))])
        self.assertFalse(all(not_onto.surjective))
        with self.assertRaises(PreconditionError):
            from_covering(not_onto)


if __name__ == "__main__":
    unittest.main()
