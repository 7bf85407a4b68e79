#!/usr/bin/env python3
"""Tests for JSON documents, bundled recipes and their conversion to domain objects."""

import json
import tempfile
import unittest
from pathlib import Path

from exceptions import EmptyFileError, FormatError, MissingInputError
from piecewise.algebras import covering_check
from piecewise.hopf import Trivialization, piecewise_principal_check
from piecewise.io import (
    DATA_DIR,
    DocumentKind,
    build_comodule_covering,
    build_covering,
    build_crt_request,
    build_sheaf,
    builder_names,
    bundled_examples,
    expand_recipe,
    load_document,
    load_payload,
    parse_document,
    validate_document,
    with_field,
)
from piecewise.sheaves import verify_flabby, verify_sheaf_axiom


class TestLoading(unittest.TestCase):
    """Reading payloads from disk."""

    def test_missing_empty_and_malformed_files(self):
        with tempfile.TemporaryDirectory() as temp_dir:
            root = Path(temp_dir)
            with self.assertRaises(MissingInputError):
                load_payload(root / "absent.json")
            (root / "empty.json").write_text("  \n", encoding="utf-8")
            with self.assertRaises(EmptyFileError):
                load_payload(root / "empty.json")
            (root / "broken.json").write_text("{not json", encoding="utf-8")
            with self.assertRaises(FormatError):
                load_payload(root / "broken.json")
            (root / "list.json").write_text("[1, 2]", encoding="utf-8")
            with self.assertRaises(FormatError):
                load_payload(root / "list.json")

    def test_every_bundled_example_validates(self):
        examples = bundled_examples()
        self.assertEqual(len(examples), 20)
        for path in examples:
            with self.subTest(path=path.name):
                self.assertEqual(validate_document(load_payload(path)), [])

    def test_expected_kind_is_enforced(self):
        path = DATA_DIR / "fun3_two_covers.json"
        self.assertEqual(load_document(path).kind, DocumentKind.COVERING)
        with self.assertRaises(FormatError):
            load_document(path, expected=(DocumentKind.SHEAF,))


class TestValidation(unittest.TestCase):
    """Schema errors are reported, not raised."""

    def test_unknown_kind(self):
        self.assertEqual(validate_document({"kind": "torus"}), ["kind: unknown document kind 'torus'"])

    def test_unit_length_must_match_dimension(self):
        payload = {"kind": "algebra", "algebra": {"dim": 2, "unit": [1]}}
        errors = validate_document(payload)
        self.assertEqual(len(errors), 1)
        self.assertTrue(errors[0].startswith("algebra.unit"))

    def test_covering_needs_a_morphism(self):
        payload = {"kind": "covering", "algebra": {"dim": 1, "unit": [1], "structure": [[0, 0, 0, 1]]},
                   "morphisms": []}
        self.assertTrue(validate_document(payload))


class TestRecipes(unittest.TestCase):
    """Builders that expand into explicit documents."""

    def test_known_builders(self):
        self.assertIn("function-covering", builder_names())
        self.assertIn("three-orbit-fibre-product", builder_names())

    def test_function_covering_recipe(self):
        payload = {"builder": "function-covering", "params": {"points": [1, 2, 3], "covers": [[1, 2], [2, 3]]}}
        document = expand_recipe(payload)
        self.assertEqual(document["kind"], "covering")
        self.assertEqual(document["algebra"]["labels"], ["1", "2", "3"])
        algebra, morphisms = build_covering(parse_document(payload))
        self.assertTrue(covering_check(algebra, morphisms).is_covering)

    def test_unknown_builder_and_bad_parameters(self):
        with self.assertRaises(FormatError):
            expand_recipe({"builder": "klein-bottle"})
        with self.assertRaises(FormatError):
            expand_recipe({"builder": "function-covering", "params": {"dots": [1]}})
        errors = validate_document({"builder": "klein-bottle"})
        self.assertEqual(len(errors), 1)
        self.assertIn("unknown builder", errors[0])

    def test_description_is_passed_through(self):
        document = expand_recipe({"builder": "square-zero-lines", "description": "three lines"})
        self.assertEqual(document["description"], "three lines")

    def test_with_field(self):
        recipe = {"builder": "group-algebra", "params": {"orders": [2]}}
        self.assertEqual(with_field(recipe, None)["params"]["field"], "q")
        self.assertEqual(with_field(recipe, "gf7")["params"]["field"], "gf7")
        self.assertNotIn("field", recipe["params"])
        explicit = {"kind": "algebra", "field": "gf5"}
        self.assertEqual(with_field(explicit, None, default="q")["field"], "gf5")
        self.assertEqual(with_field(explicit, "gf3")["field"], "gf3")
        self.assertEqual(with_field({"kind": "algebra"}, None, default="gf11")["field"], "gf11")


class TestBuilding(unittest.TestCase):
    """Documents to domain objects."""

    def test_crt_request(self):
        document = load_document(DATA_DIR / "crt_fun3.json", expected=(DocumentKind.CRT_GLUE,))
        algebra, morphisms, opens, elements = build_crt_request(document)
        self.assertEqual(algebra.dim, 3)
        self.assertEqual(len(opens), 2)
        self.assertEqual(len(elements[1]), 3)

    def test_crt_request_needs_one_element_per_open_set(self):
        payload = load_payload(DATA_DIR / "crt_fun3.json")
        payload["elements"] = payload["elements"][:1]
        with self.assertRaises(FormatError):
            build_crt_request(parse_document(payload))

    def test_sheaf_document(self):
        sheaf = build_sheaf(load_document(DATA_DIR / "fun3_sheaf.json"))
        self.assertEqual(sheaf.structure_errors(), [])
        self.assertTrue(verify_flabby(sheaf).flabby)
        self.assertTrue(verify_sheaf_axiom(sheaf, "basis").holds)

    def test_sheaf_document_with_a_bad_key(self):
        payload = load_payload(DATA_DIR / "fun3_sheaf.json")
        payload = parse_document(payload).model_dump(mode="json")
        payload["sections"]["[[1,2,3]]"] = payload["sections"]["[]"]
        with self.assertRaises(FormatError):
            build_sheaf(parse_document(payload))

    def test_comodule_covering_with_trivializations(self):
        document = load_document(DATA_DIR / "free_z2_covering.json")
        comodule, morphisms, trivializations = build_comodule_covering(document)
        self.assertEqual(len(morphisms), 2)
        self.assertTrue(all(isinstance(t, Trivialization) for t in trivializations))
        report = piecewise_principal_check(comodule, morphisms, trivializations)
        self.assertTrue(report.piecewise_trivial)

    def test_expanded_documents_are_plain_json(self):
        document = expand_recipe(load_payload(DATA_DIR / "hopf_z3_gf7.json"))
        self.assertEqual(json.loads(json.dumps(document)), document)


if __name__ == "__main__":
    unittest.main()
