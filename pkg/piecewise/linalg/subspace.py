"""Subspaces in canonical echelon form, sums, intersections and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from exceptions import DimensionMismatchError
from piecewise.linalg.field import FieldSpec
from piecewise.linalg.matrix import LinearMap, Vector, kron_vectors, stack_columns
from piecewise.linalg.solve import echelon_rows


@dataclass(frozen=True)
class Subspace:
    """A subspace of k^ambient_dim given by its reduced echelon basis.

    Two subspaces are equal iff their echelon bases coincide.
    """

    field: FieldSpec
    ambient_dim: int
    basis: Tuple[Vector, ...]
    pivots: Tuple[int, ...]

    @classmethod
    def span(cls, field: FieldSpec, ambient_dim: int, vectors: Sequence[Sequence]) -> "Subspace":
        basis, pivots = echelon_rows(field, ambient_dim, list(vectors))
        return cls(field, ambient_dim, basis, pivots)

    @classmethod
    def zero(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        return cls(field, ambient_dim, (), ())

    @classmethod
    def full(cls, field: FieldSpec, ambient_dim: int) -> "Subspace":
        basis = tuple(
            tuple(field.one if j == i else field.zero for j in range(ambient_dim)) for i in range(ambient_dim)
        )
        return cls(field, ambient_dim, basis, tuple(range(ambient_dim)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def codim(self) -> int:
        return self.ambient_dim - self.dim

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def _require_ambient(self, other_dim: int) -> None:
        if other_dim != self.ambient_dim:
            raise DimensionMismatchError(f"ambient dimension {other_dim} differs from {self.ambient_dim}")

    def residue(self, vector: Sequence) -> Vector:
        """Reduce a vector modulo the subspace (zero iff it lies inside)."""
        self._require_ambient(len(vector))
        values = list(vector)
        for row, pivot in zip(self.basis, self.pivots):
            coefficient = values[pivot]
            if coefficient:
                values = [v - coefficient * r for v, r in zip(values, row)]
        return tuple(values)

    def contains(self, vector: Sequence) -> bool:
        return not any(self.residue(vector))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._require_ambient(other.ambient_dim)
        return all(self.contains(v) for v in other.basis)

    def coordinates(self, vector: Sequence) -> Vector:
        """Coordinates of a member vector in the echelon basis."""
        if not self.contains(vector):
            raise DimensionMismatchError("vector does not lie in the subspace")
        return tuple(vector[p] for p in self.pivots)

    def inclusion(self) -> LinearMap:
        """The map k^dim -> k^ambient sending coordinates to vectors."""
        return LinearMap.from_columns(self.field, self.ambient_dim, list(self.basis))

    def coordinate_projection(self) -> LinearMap:
        """Read pivot coordinates; a left inverse of `inclusion`."""
        return LinearMap.from_entries(
            self.field, self.dim, self.ambient_dim, {r: {p: self.field.one} for r, p in enumerate(self.pivots)}
        )

    def image_under(self, linear_map: LinearMap) -> "Subspace":
        return Subspace.span(self.field, linear_map.target_dim, [linear_map.apply(v) for v in self.basis])

    def to_strings(self):
        return [[self.field.to_str(x) for x in row] for row in self.basis]


class CombineMode(str, Enum):
    SUM = "sum"
    INTERSECTION = "intersection"


def subspace_combine(u: Subspace, v: Subspace, mode: CombineMode) -> Subspace:
    """Canonical U+V or U∩V."""
    u.field.require_same(v.field)
    if u.ambient_dim != v.ambient_dim:
        raise DimensionMismatchError(f"ambient mismatch {u.ambient_dim} vs {v.ambient_dim}")
    if CombineMode(mode) == CombineMode.SUM:
        return Subspace.span(u.field, u.ambient_dim, list(u.basis) + list(v.basis))
    if u.is_zero() or v.is_zero():
        return Subspace.zero(u.field, u.ambient_dim)
    # x = U^T a = V^T b  <=>  (a, b) in ker [U^T | -V^T]
    relation = stack_columns([u.inclusion(), v.inclusion().scale(-1)])
    left = u.inclusion()
    vectors = [left.apply(k[: u.dim]) for k in relation.kernel().basis]
    return Subspace.span(u.field, u.ambient_dim, vectors)


def subspace_sum(spaces: Sequence[Subspace], field: FieldSpec, ambient_dim: int) -> Subspace:
    result = Subspace.zero(field, ambient_dim)
    for space in spaces:
        result = subspace_combine(result, space, CombineMode.SUM)
    return result


def subspace_intersection(spaces: Sequence[Subspace], field: FieldSpec, ambient_dim: int) -> Subspace:
    result = Subspace.full(field, ambient_dim)
    for space in spaces:
        result = subspace_combine(result, space, CombineMode.INTERSECTION)
    return result


def tensor_subspace(u: Subspace, v: Subspace) -> Subspace:
    """U (x) V inside k^m (x) k^n."""
    u.field.require_same(v.field)
    return Subspace.span(u.field, u.ambient_dim * v.ambient_dim, [kron_vectors(a, b) for a in u.basis for b in v.basis])


@dataclass(frozen=True)
class QuotientData:
    """k^n -> k^n / J together with a linear section."""

    projection: LinearMap
    section: LinearMap
    complement: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.projection.target_dim


def quotient_with_section(ambient_dim: int, j: Subspace, unit: Optional[Sequence] = None) -> QuotientData:
    """Quotient by J on the complement of J's pivot columns.

    When `unit` is given and not in J, the section maps the class of `unit` back to `unit`.
    """
    field = j.field
    j._require_ambient(ambient_dim)
    pivot_set = set(j.pivots)
    complement = tuple(c for c in range(ambient_dim) if c not in pivot_set)
    position = {c: k for k, c in enumerate(complement)}
    projection_entries = {}
    for c in complement:
        projection_entries.setdefault(position[c], {})[c] = field.one
    for row, pivot in zip(j.basis, j.pivots):
        for c in complement:
            if row[c]:
                projection_entries.setdefault(position[c], {})[pivot] = -row[c]
    q = len(complement)
    projection = LinearMap.from_entries(field, q, ambient_dim, projection_entries)
    columns = [tuple(field.one if i == c else field.zero for i in range(ambient_dim)) for c in complement]
    if unit is not None:
        image = projection.apply(unit)
        nonzero = [k for k, value in enumerate(image) if value]
        if nonzero:
            k0 = nonzero[0]
            lift = list(unit)
            for k in nonzero[1:]:
                lift = [a - image[k] * b for a, b in zip(lift, columns[k])]
            inverse = field.domain.quo(field.one, image[k0])
            columns[k0] = tuple(inverse * a for a in lift)
    section = LinearMap.from_columns(field, ambient_dim, columns)
    return QuotientData(projection, section, complement)
