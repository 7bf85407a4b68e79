"""Exact elimination: reduced echelon forms, kernels, affine systems."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from exceptions import DimensionMismatchError
from piecewise.linalg.field import FieldSpec
from piecewise.linalg.matrix import Entries, LinearMap, Vector, matrix_entries, stack_columns

logger = logging.getLogger(__name__)


def rref(linear_map: LinearMap) -> Tuple[Entries, Tuple[int, ...]]:
    """Reduced row echelon form as (nonzero row entries, pivot columns)."""
    rows, cols = linear_map.shape
    if rows == 0 or cols == 0 or linear_map.is_zero():
        return {}, ()
    reduced, pivots = linear_map.matrix.rref()
    return matrix_entries(reduced), tuple(pivots)


def echelon_rows(field: FieldSpec, dim: int, vectors: Sequence[Sequence]) -> Tuple[Tuple[Vector, ...], Tuple[int, ...]]:
    """Canonical echelon basis of the span of `vectors` in k^dim."""
    entries: Entries = {}
    for i, vector in enumerate(vectors):
        if len(vector) != dim:
            raise DimensionMismatchError(f"vector of length {len(vector)} in ambient dimension {dim}")
        entries[i] = {j: value for j, value in enumerate(vector) if value}
    stacked = LinearMap.from_entries(field, len(vectors), dim, entries)
    reduced, pivots = rref(stacked)
    zero = field.zero
    basis = []
    for r in range(len(pivots)):
        row = [zero] * dim
        for j, value in reduced.get(r, {}).items():
            row[j] = value
        basis.append(tuple(row))
    return tuple(basis), pivots


def kernel(linear_map: LinearMap):
    """Null space of a linear map as a canonical Subspace of its source."""
    from piecewise.linalg.subspace import Subspace

    field = linear_map.field
    n = linear_map.source_dim
    reduced, pivots = rref(linear_map)
    pivot_set = set(pivots)
    vectors = []
    for free in range(n):
        if free in pivot_set:
            continue
        values = [field.zero] * n
        values[free] = field.one
        for r, p in enumerate(pivots):
            coefficient = reduced.get(r, {}).get(free)
            if coefficient:
                values[p] = -coefficient
        vectors.append(tuple(values))
    return Subspace.span(field, n, vectors)


def solve_many(a: LinearMap, b: LinearMap) -> Optional[LinearMap]:
    """Some X with A X = B, or None if any column of B is out of range."""
    a.field.require_same(b.field)
    if a.target_dim != b.target_dim:
        raise DimensionMismatchError(f"system has {a.target_dim} equations but right side has {b.target_dim} rows")
    n = a.source_dim
    if b.source_dim == 0:
        return LinearMap.zero(a.field, n, 0)
    reduced, pivots = rref(stack_columns([a, b]))
    if any(p >= n for p in pivots):
        return None
    solution: Entries = {}
    for r, p in enumerate(pivots):
        row = {j - n: value for j, value in reduced.get(r, {}).items() if j >= n}
        if row:
            solution[p] = row
    return LinearMap.from_entries(a.field, n, b.source_dim, solution)


def solve_affine(a: LinearMap, b: Sequence) -> Optional[Vector]:
    """Some x with A(x) = b (free variables set to zero), or None when infeasible."""
    if len(b) != a.target_dim:
        raise DimensionMismatchError(f"right side of length {len(b)} for {a.target_dim} equations")
    from piecewise.linalg.matrix import column_map

    result = solve_many(a, column_map(a.field, b))
    if result is None:
        return None
    return result.column(0)


def right_inverse(a: LinearMap) -> Optional[LinearMap]:
    """A section of a surjective map, or None if the map is not surjective."""
    return solve_many(a, LinearMap.identity(a.field, a.target_dim))


def inverse(a: LinearMap) -> Optional[LinearMap]:
    if not a.is_bijective():
        return None
    return right_inverse(a)


@dataclass
class AffineSystem:
    """Incrementally assembled sparse affine system over named equation blocks."""

    field: FieldSpec
    unknowns: int
    rows: List[Dict[int, object]] = dc_field(default_factory=list)
    rhs: List[object] = dc_field(default_factory=list)
    blocks: List[Tuple[str, int, int]] = dc_field(default_factory=list)

    def begin_block(self, name: str) -> None:
        self.blocks.append((name, len(self.rows), len(self.rows)))

    def add(self, coefficients: Dict[int, object], value=None) -> None:
        self.rows.append({k: v for k, v in coefficients.items() if v})
        self.rhs.append(self.field.zero if value is None else value)
        name, start, _ = self.blocks[-1]
        self.blocks[-1] = (name, start, len(self.rows))

    def _matrices(self, stop: int) -> Tuple[LinearMap, Vector]:
        entries = {i: row for i, row in enumerate(self.rows[:stop]) if row}
        return (LinearMap.from_entries(self.field, stop, self.unknowns, entries), tuple(self.rhs[:stop]))

    def solve(self) -> Optional[Vector]:
        matrix, value = self._matrices(len(self.rows))
        logger.debug("Solving affine system", extra={
            "component": "AffineSystem",
            "data": {"equations": len(self.rows), "unknowns": self.unknowns, "blocks": [b[0] for b in self.blocks]},
        })
        return solve_affine(matrix, value)

    def first_inconsistent_block(self) -> Optional[str]:
        """Name of the first block whose addition makes the system infeasible."""
        for name, _, stop in self.blocks:
            matrix, value = self._matrices(stop)
            if solve_affine(matrix, value) is None:
                return name
        return None
