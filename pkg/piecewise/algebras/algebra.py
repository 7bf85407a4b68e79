"""Finite-dimensional unital associative algebras given by structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, List, Optional, Sequence, Tuple

from exceptions import DimensionMismatchError, MorphismError, NotAnIdealError, StructureError
from piecewise.linalg import (
    FieldSpec,
    LinearMap,
    Subspace,
    Vector,
    column_map,
    kron_vectors,
    swap,
    tensor,
    tensor_all,
    unit_vector,
)


@dataclass(frozen=True, eq=False)
class Algebra:
    """Algebra on k^dim; column i*dim+j of `multiplication` holds e_i e_j."""

    field: FieldSpec
    dim: int
    multiplication: LinearMap
    unit: Vector
    labels: Optional[Tuple[Hashable, ...]] = None
    name: str = ""

    def __post_init__(self) -> None:
        if self.multiplication.shape != (self.dim, self.dim * self.dim):
            raise DimensionMismatchError(
                f"multiplication has shape {self.multiplication.shape}, expected ({self.dim}, {self.dim ** 2})"
            )
        if len(self.unit) != self.dim:
            raise DimensionMismatchError(f"unit of length {len(self.unit)} for dimension {self.dim}")

    @classmethod
    def from_structure(cls, field: FieldSpec, dim: int, unit: Sequence, structure: Iterable[Tuple[int, int, int, object]],
                       labels: Optional[Sequence[Hashable]] = None, name: str = "", validate: bool = True) -> "Algebra":
        """Build from triples (i, j, k, c) meaning e_i e_j has coefficient c at e_k."""
        entries = {}
        for i, j, k, c in structure:
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise DimensionMismatchError(f"structure index ({i}, {j}, {k}) out of range for dimension {dim}")
            value = field.convert(c) if isinstance(c, (str, int)) else c
            row = entries.setdefault(k, {})
            row[i * dim + j] = row.get(i * dim + j, field.zero) + value
        unit_vec = tuple(field.convert(u) if isinstance(u, (str, int)) else u for u in unit)
        algebra = cls(field, dim, LinearMap.from_entries(field, dim, dim * dim, entries), unit_vec,
                      tuple(labels) if labels is not None else None, name)
        if validate:
            algebra.validate()
        return algebra

    @classmethod
    def zero(cls, field: FieldSpec) -> "Algebra":
        return cls(field, 0, LinearMap.zero(field, 0, 0), (), (), "0")

    def structure_triples(self) -> List[Tuple[int, int, int, object]]:
        triples = []
        for k, row in self.multiplication.entries().items():
            for column, value in row.items():
                triples.append((column // self.dim, column % self.dim, k, value))
        return sorted(triples, key=lambda t: (t[0], t[1], t[2]))

    # elements ---------------------------------------------------------------------

    def basis_vector(self, index: int) -> Vector:
        return unit_vector(self.field, self.dim, index)

    def zero_element(self) -> Vector:
        return tuple([self.field.zero] * self.dim)

    def multiply(self, x: Sequence, y: Sequence) -> Vector:
        return self.multiplication.apply(kron_vectors(x, y))

    def identity_map(self) -> LinearMap:
        return LinearMap.identity(self.field, self.dim)

    def unit_map(self) -> LinearMap:
        """k -> A, 1 |-> 1."""
        return column_map(self.field, self.unit)

    def left_multiplication(self, x: Sequence) -> LinearMap:
        return self.multiplication @ tensor(column_map(self.field, x), self.identity_map())

    def right_multiplication(self, y: Sequence) -> LinearMap:
        return self.multiplication @ tensor(self.identity_map(), column_map(self.field, y))

    # axioms -----------------------------------------------------------------------

    def axiom_errors(self) -> List[str]:
        errors: List[str] = []
        if self.dim == 0:
            return errors
        m = self.multiplication
        identity = self.identity_map()
        if m @ tensor(m, identity) != m @ tensor(identity, m):
            errors.append("multiplication is not associative")
        unit = self.unit_map()
        if m @ tensor(unit, identity) != identity:
            errors.append("unit is not a left identity")
        if m @ tensor(identity, unit) != identity:
            errors.append("unit is not a right identity")
        return errors

    def validate(self) -> "Algebra":
        errors = self.axiom_errors()
        if errors:
            raise StructureError(f"{self!r} fails: {'; '.join(errors)}")
        return self

    def same_structure(self, other: "Algebra") -> bool:
        return (self.field == other.field and self.dim == other.dim
                and self.multiplication == other.multiplication and tuple(self.unit) == tuple(other.unit))

    def is_commutative(self) -> bool:
        return self.multiplication == self.multiplication @ swap(self.field, self.dim, self.dim)

    def __repr__(self) -> str:
        return f"Algebra({self.name or '?'}, dim={self.dim}, {self.field.label})"


def same_algebra(a: Algebra, b: Algebra) -> bool:
    return a is b or a.same_structure(b)


@dataclass(frozen=True, eq=False)
class AlgebraMorphism:
    """A linear map between algebras that is multiplicative and unital."""

    source: Algebra
    target: Algebra
    matrix: LinearMap

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionMismatchError(
                f"morphism matrix {self.matrix.shape} does not match {self.target.dim}x{self.source.dim}"
            )

    @classmethod
    def identity(cls, algebra: Algebra) -> "AlgebraMorphism":
        return cls(algebra, algebra, algebra.identity_map())

    def apply(self, x: Sequence) -> Vector:
        return self.matrix.apply(x)

    def axiom_errors(self) -> List[str]:
        errors: List[str] = []
        if self.target.dim == 0:
            return errors
        if self.source.dim == 0:
            return ["no unital morphism from the zero algebra to a nonzero algebra"]
        f = self.matrix
        if f @ self.source.multiplication != self.target.multiplication @ tensor(f, f):
            errors.append("not multiplicative")
        if f.apply(self.source.unit) != tuple(self.target.unit):
            errors.append("not unital")
        return errors

    def validate(self) -> "AlgebraMorphism":
        errors = self.axiom_errors()
        if errors:
            raise MorphismError(f"{self.source!r} -> {self.target!r}: {'; '.join(errors)}")
        return self

    def compose(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """self o other."""
        return AlgebraMorphism(other.source, self.target, self.matrix @ other.matrix)

    def is_surjective(self) -> bool:
        return self.matrix.is_surjective()

    def is_injective(self) -> bool:
        return self.matrix.is_injective()

    def is_isomorphism(self) -> bool:
        return self.matrix.is_bijective() and not self.axiom_errors()

    def kernel(self) -> "Ideal":
        return Ideal(self.source, self.matrix.kernel())


@dataclass(frozen=True)
class Ideal:
    """A two-sided ideal, stored as its underlying subspace."""

    parent: Algebra
    space: Subspace

    @classmethod
    def of(cls, parent: Algebra, space: Subspace) -> "Ideal":
        ideal = cls(parent, space)
        if not ideal.is_two_sided():
            raise NotAnIdealError("subspace is not closed under multiplication by the algebra")
        return ideal

    @property
    def dim(self) -> int:
        return self.space.dim

    def is_left_closed(self) -> bool:
        parent = self.parent
        return all(
            self.space.contains(parent.multiply(parent.basis_vector(i), v))
            for i in range(parent.dim) for v in self.space.basis
        )

    def is_right_closed(self) -> bool:
        parent = self.parent
        return all(
            self.space.contains(parent.multiply(v, parent.basis_vector(i)))
            for i in range(parent.dim) for v in self.space.basis
        )

    def is_two_sided(self) -> bool:
        return self.is_left_closed() and self.is_right_closed()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.parent is other.parent and self.space == other.space

    def __hash__(self) -> int:
        return hash((id(self.parent), self.space))


def subalgebra(parent: Algebra, space: Subspace, name: str = "") -> Tuple[Algebra, AlgebraMorphism]:
    """The subalgebra on `space` in echelon coordinates, with its inclusion."""
    if not space.contains(parent.unit) and parent.dim:
        raise StructureError("subspace does not contain the unit")
    basis = space.basis
    d = len(basis)
    columns = []
    for a in basis:
        for b in basis:
            product = parent.multiply(a, b)
            if not space.contains(product):
                raise StructureError("subspace is not closed under multiplication")
            columns.append(tuple(product[p] for p in space.pivots))
    multiplication = LinearMap.from_columns(parent.field, d, columns) if columns else LinearMap.zero(parent.field, d, 0)
    unit = tuple(parent.unit[p] for p in space.pivots)
    algebra = Algebra(parent.field, d, multiplication, unit, name=name or f"sub({parent.name})")
    return algebra, AlgebraMorphism(algebra, parent, space.inclusion())


def direct_sum_algebra(a: Algebra, b: Algebra) -> Algebra:
    a.field.require_same(b.field)
    n = a.dim + b.dim
    entries = {}
    for k, row in a.multiplication.entries().items():
        for column, value in row.items():
            i, j = divmod(column, a.dim)
            entries.setdefault(k, {})[i * n + j] = value
    for k, row in b.multiplication.entries().items():
        for column, value in row.items():
            i, j = divmod(column, b.dim)
            entries.setdefault(a.dim + k, {})[(a.dim + i) * n + a.dim + j] = value
    return Algebra(a.field, n, LinearMap.from_entries(a.field, n, n * n, entries),
                   tuple(a.unit) + tuple(b.unit), name=f"{a.name}+{b.name}")


def direct_sum_all(algebras: Sequence[Algebra]) -> Algebra:
    result = algebras[0]
    for item in algebras[1:]:
        result = direct_sum_algebra(result, item)
    return result


def tensor_algebra(a: Algebra, b: Algebra) -> Algebra:
    """A (x) B with (a (x) b)(a' (x) b') = aa' (x) bb'."""
    a.field.require_same(b.field)
    field = a.field
    shuffle = tensor_all([a.identity_map(), swap(field, b.dim, a.dim), b.identity_map()])
    multiplication = tensor(a.multiplication, b.multiplication) @ shuffle
    return Algebra(field, a.dim * b.dim, multiplication, kron_vectors(a.unit, b.unit), name=f"{a.name}(x){b.name}")
