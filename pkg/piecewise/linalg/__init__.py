"""Exact linear algebra over the rationals and prime fields."""

from piecewise.linalg.field import FieldKind, FieldSpec
from piecewise.linalg.matrix import (
    LinearMap,
    Vector,
    block_injection,
    block_projection,
    column_map,
    direct_sum,
    kron_vectors,
    stack_columns,
    stack_rows,
    swap,
    tensor,
    tensor_all,
    unit_vector,
    vector_from_strings,
    vector_to_strings,
)
from piecewise.linalg.solve import AffineSystem, inverse, kernel, right_inverse, rref, solve_affine, solve_many
from piecewise.linalg.subspace import (
    CombineMode,
    QuotientData,
    Subspace,
    quotient_with_section,
    subspace_combine,
    subspace_intersection,
    subspace_sum,
    tensor_subspace,
)

__all__ = [
    "AffineSystem",
    "CombineMode",
    "FieldKind",
    "FieldSpec",
    "LinearMap",
    "QuotientData",
    "Subspace",
    "Vector",
    "block_injection",
    "block_projection",
    "column_map",
    "direct_sum",
    "inverse",
    "kernel",
    "kron_vectors",
    "quotient_with_section",
    "right_inverse",
    "rref",
    "solve_affine",
    "solve_many",
    "stack_columns",
    "stack_rows",
    "subspace_combine",
    "subspace_intersection",
    "subspace_sum",
    "swap",
    "tensor",
    "tensor_all",
    "tensor_subspace",
    "unit_vector",
    "vector_from_strings",
    "vector_to_strings",
]
