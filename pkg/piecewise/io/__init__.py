"""JSON documents, bundled recipes and their conversion to domain objects."""

from piecewise.io.builders import BUILDERS, builder_names, expand_recipe
from piecewise.io.dumpers import (
    algebra_model,
    comodule_covering_document,
    comodule_model,
    covering_document,
    fibre_product_document,
    hopf_model,
    matrix_rows,
    sheaf_document,
    smash_model,
)
from piecewise.io.loaders import (
    DATA_DIR,
    build_algebra,
    build_comodule,
    build_comodule_covering,
    build_covering,
    build_crt_request,
    build_fibre_product_legs,
    build_hopf,
    build_sheaf,
    build_smash,
    bundled_examples,
    field_of,
    load_document,
    load_payload,
    parse_document,
    rows_map,
    validate_document,
    with_field,
)
from piecewise.io.models import DOCUMENT_MODELS, DocumentKind

__all__ = [
    "BUILDERS",
    "DATA_DIR",
    "DOCUMENT_MODELS",
    "DocumentKind",
    "algebra_model",
    "build_algebra",
    "build_comodule",
    "build_comodule_covering",
    "build_covering",
    "build_crt_request",
    "build_fibre_product_legs",
    "build_hopf",
    "build_sheaf",
    "build_smash",
    "builder_names",
    "bundled_examples",
    "comodule_covering_document",
    "comodule_model",
    "covering_document",
    "expand_recipe",
    "fibre_product_document",
    "field_of",
    "hopf_model",
    "load_document",
    "load_payload",
    "matrix_rows",
    "parse_document",
    "rows_map",
    "sheaf_document",
    "smash_model",
    "validate_document",
    "with_field",
]
