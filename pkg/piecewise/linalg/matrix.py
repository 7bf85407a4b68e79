"""Linear maps between coordinate spaces, stored as sparse sympy DomainMatrix objects.

Tensor products use the row-major basis ordering e_i (x) e_j -> i * dim + j throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from exceptions import DimensionMismatchError, FormatError
from piecewise.linalg.field import FieldSpec

Vector = Tuple  # tuple of field elements
Entries = Dict[int, Dict[int, object]]


def _clean(entries: Mapping[int, Mapping[int, object]]) -> Entries:
    cleaned: Entries = {}
    for i, row in entries.items():
        kept = {j: value for j, value in row.items() if value}
        if kept:
            cleaned[i] = kept
    return cleaned


def sparse_matrix(field: FieldSpec, entries: Mapping[int, Mapping[int, object]], shape: Tuple[int, int]) -> DomainMatrix:
    converted = {i: {j: _as_element(field, v) for j, v in row.items()} for i, row in entries.items()}
    return DomainMatrix(_clean(converted), shape, field.domain)


def matrix_entries(matrix: DomainMatrix) -> Entries:
    """Nonzero entries of a DomainMatrix as a dict of row dicts."""
    rep = matrix.to_sparse().rep
    return _clean({i: dict(row) for i, row in rep.items()})


@dataclass(frozen=True, eq=False)
class LinearMap:
    """A k-linear map k^source_dim -> k^target_dim."""

    field: FieldSpec
    source_dim: int
    target_dim: int
    matrix: DomainMatrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target_dim, self.source_dim):
            raise DimensionMismatchError(
                f"matrix shape {self.matrix.shape} does not match {self.target_dim}x{self.source_dim}"
            )

    # construction -----------------------------------------------------------------

    @classmethod
    def from_entries(cls, field: FieldSpec, target_dim: int, source_dim: int,
                     entries: Mapping[int, Mapping[int, object]]) -> "LinearMap":
        return cls(field, source_dim, target_dim, sparse_matrix(field, entries, (target_dim, source_dim)))

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[object]], source_dim: Optional[int] = None) -> "LinearMap":
        """Build from dense rows of scalars (strings, ints or field elements)."""
        if source_dim is None:
            source_dim = len(rows[0]) if rows else 0
        entries: Entries = {}
        for i, row in enumerate(rows):
            if len(row) != source_dim:
                raise FormatError(f"row {i} has {len(row)} entries, expected {source_dim}")
            entries[i] = {j: _as_element(field, value) for j, value in enumerate(row)}
        return cls.from_entries(field, len(rows), source_dim, entries)

    @classmethod
    def from_columns(cls, field: FieldSpec, target_dim: int, columns: Sequence[Vector]) -> "LinearMap":
        entries: Entries = {}
        for j, column in enumerate(columns):
            for i, value in enumerate(column):
                if value:
                    entries.setdefault(i, {})[j] = value
        return cls.from_entries(field, target_dim, len(columns), entries)

    @classmethod
    def identity(cls, field: FieldSpec, dim: int) -> "LinearMap":
        return cls.from_entries(field, dim, dim, {i: {i: field.one} for i in range(dim)})

    @classmethod
    def zero(cls, field: FieldSpec, target_dim: int, source_dim: int) -> "LinearMap":
        return cls.from_entries(field, target_dim, source_dim, {})

    # access -----------------------------------------------------------------------

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.target_dim, self.source_dim)

    def entries(self) -> Entries:
        return matrix_entries(self.matrix)

    def entry(self, i: int, j: int):
        return self.entries().get(i, {}).get(j, self.field.zero)

    def columns(self) -> List[Vector]:
        zero = self.field.zero
        cols = [[zero] * self.target_dim for _ in range(self.source_dim)]
        for i, row in self.entries().items():
            for j, value in row.items():
                cols[j][i] = value
        return [tuple(col) for col in cols]

    def column(self, j: int) -> Vector:
        zero = self.field.zero
        out = [zero] * self.target_dim
        for i, row in self.entries().items():
            if j in row:
                out[i] = row[j]
        return tuple(out)

    def to_strings(self) -> List[List[str]]:
        field = self.field
        dense = [[field.to_str(field.zero)] * self.source_dim for _ in range(self.target_dim)]
        for i, row in self.entries().items():
            for j, value in row.items():
                dense[i][j] = field.to_str(value)
        return dense

    def is_zero(self) -> bool:
        return not self.entries()

    # arithmetic -------------------------------------------------------------------

    def apply(self, vector: Sequence) -> Vector:
        if len(vector) != self.source_dim:
            raise DimensionMismatchError(f"vector of length {len(vector)} for map with source {self.source_dim}")
        zero = self.field.zero
        out = [zero] * self.target_dim
        for i, row in self.entries().items():
            total = zero
            for j, value in row.items():
                if vector[j]:
                    total = total + value * vector[j]
            out[i] = total
        return tuple(out)

    def compose(self, other: "LinearMap") -> "LinearMap":
        """Return self o other."""
        self.field.require_same(other.field)
        if other.target_dim != self.source_dim:
            raise DimensionMismatchError(
                f"cannot compose {self.target_dim}x{self.source_dim} after {other.target_dim}x{other.source_dim}"
            )
        if 0 in (self.target_dim, self.source_dim, other.source_dim):
            return LinearMap.zero(self.field, self.target_dim, other.source_dim)
        return LinearMap(self.field, other.source_dim, self.target_dim, self.matrix.matmul(other.matrix))

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        return self.compose(other)

    def _combine(self, other: "LinearMap", sign: int) -> "LinearMap":
        self.field.require_same(other.field)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape mismatch {self.shape} vs {other.shape}")
        entries = self.entries()
        for i, row in other.entries().items():
            target = entries.setdefault(i, {})
            for j, value in row.items():
                current = target.get(j, self.field.zero)
                target[j] = current + value if sign > 0 else current - value
        return LinearMap.from_entries(self.field, self.target_dim, self.source_dim, entries)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return self._combine(other, 1)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return self._combine(other, -1)

    def scale(self, scalar) -> "LinearMap":
        scalar = _as_element(self.field, scalar)
        entries = {i: {j: v * scalar for j, v in row.items()} for i, row in self.entries().items()}
        return LinearMap.from_entries(self.field, self.target_dim, self.source_dim, entries)

    def transpose(self) -> "LinearMap":
        entries: Entries = {}
        for i, row in self.entries().items():
            for j, value in row.items():
                entries.setdefault(j, {})[i] = value
        return LinearMap.from_entries(self.field, self.source_dim, self.target_dim, entries)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearMap):
            return NotImplemented
        return (self.field == other.field and self.shape == other.shape
                and self.entries() == other.entries())

    def __hash__(self) -> int:
        return hash((self.field, self.shape, tuple(sorted(
            (i, j, v) for i, row in self.entries().items() for j, v in row.items()))))

    def __repr__(self) -> str:
        return f"LinearMap({self.field.label}, {self.target_dim}x{self.source_dim})"

    # derived ----------------------------------------------------------------------

    def rank(self) -> int:
        from piecewise.linalg.solve import rref

        return len(rref(self)[1])

    def kernel(self):
        from piecewise.linalg.solve import kernel

        return kernel(self)

    def image(self):
        from piecewise.linalg.subspace import Subspace

        return Subspace.span(self.field, self.target_dim, self.columns())

    def is_injective(self) -> bool:
        return self.rank() == self.source_dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target_dim

    def is_bijective(self) -> bool:
        return self.source_dim == self.target_dim and self.is_injective()


def _as_element(field: FieldSpec, value):
    if isinstance(value, (str, int)):
        return field.convert(value)
    return value


def tensor(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product f (x) g with row-major basis ordering."""
    f.field.require_same(g.field)
    entries: Entries = {}
    g_entries = g.entries()
    for i1, row1 in f.entries().items():
        for i2, row2 in g_entries.items():
            target = entries.setdefault(i1 * g.target_dim + i2, {})
            for j1, v1 in row1.items():
                for j2, v2 in row2.items():
                    target[j1 * g.source_dim + j2] = v1 * v2
    return LinearMap.from_entries(
        f.field, f.target_dim * g.target_dim, f.source_dim * g.source_dim, entries
    )


def tensor_all(maps: Iterable[LinearMap]) -> LinearMap:
    maps = list(maps)
    result = maps[0]
    for item in maps[1:]:
        result = tensor(result, item)
    return result


def stack_rows(maps: Sequence[LinearMap]) -> LinearMap:
    """Vertical block [f1; f2; ...] of maps sharing a source."""
    field = maps[0].field
    source = maps[0].source_dim
    entries: Entries = {}
    offset = 0
    for item in maps:
        if item.source_dim != source:
            raise DimensionMismatchError("stacked maps must share a source")
        for i, row in item.entries().items():
            entries[offset + i] = dict(row)
        offset += item.target_dim
    return LinearMap.from_entries(field, offset, source, entries)


def stack_columns(maps: Sequence[LinearMap]) -> LinearMap:
    """Horizontal block [f1 | f2 | ...] of maps sharing a target."""
    field = maps[0].field
    target = maps[0].target_dim
    entries: Entries = {}
    offset = 0
    for item in maps:
        if item.target_dim != target:
            raise DimensionMismatchError("juxtaposed maps must share a target")
        for i, row in item.entries().items():
            dest = entries.setdefault(i, {})
            for j, value in row.items():
                dest[offset + j] = value
        offset += item.source_dim
    return LinearMap.from_entries(field, target, offset, entries)


def direct_sum(f: LinearMap, g: LinearMap) -> LinearMap:
    entries: Entries = {i: dict(row) for i, row in f.entries().items()}
    for i, row in g.entries().items():
        entries[f.target_dim + i] = {f.source_dim + j: v for j, v in row.items()}
    return LinearMap.from_entries(f.field, f.target_dim + g.target_dim, f.source_dim + g.source_dim, entries)


def block_projection(field: FieldSpec, sizes: Sequence[int], index: int) -> LinearMap:
    """k^{sizes[0]} ⊕ ... -> k^{sizes[index]}."""
    offset = sum(sizes[:index])
    return LinearMap.from_entries(
        field, sizes[index], sum(sizes), {r: {offset + r: field.one} for r in range(sizes[index])}
    )


def block_injection(field: FieldSpec, sizes: Sequence[int], index: int) -> LinearMap:
    return block_projection(field, sizes, index).transpose()


def swap(field: FieldSpec, m: int, n: int) -> LinearMap:
    """The flip k^m (x) k^n -> k^n (x) k^m."""
    return LinearMap.from_entries(
        field, n * m, m * n, {j * m + i: {i * n + j: field.one} for i in range(m) for j in range(n)}
    )


def column_map(field: FieldSpec, vector: Sequence) -> LinearMap:
    """The map k -> k^n sending 1 to `vector`."""
    return LinearMap.from_columns(field, len(vector), [tuple(vector)])


# vectors ------------------------------------------------------------------------


def unit_vector(field: FieldSpec, dim: int, index: int) -> Vector:
    values = [field.zero] * dim
    values[index] = field.one
    return tuple(values)


def kron_vectors(u: Sequence, v: Sequence) -> Vector:
    return tuple(a * b for a in u for b in v)


def vector_from_strings(field: FieldSpec, values: Sequence) -> Vector:
    return tuple(_as_element(field, value) for value in values)


def vector_to_strings(field: FieldSpec, vector: Sequence) -> List[str]:
    return [field.to_str(value) for value in vector]
