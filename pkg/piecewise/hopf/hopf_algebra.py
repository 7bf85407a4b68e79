"""Finite-dimensional Hopf algebras given by structure matrices."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from exceptions import DimensionMismatchError, StructureError
from piecewise.algebras import Algebra, tensor_algebra
from piecewise.hopf.groups import FiniteGroup
from piecewise.linalg import FieldSpec, LinearMap, inverse, tensor


@dataclass(frozen=True, eq=False)
class HopfData:
    """(H, Δ, ε, S) with S invertible; Δ has shape (d², d), ε shape (1, d)."""

    algebra: Algebra
    coproduct: LinearMap
    counit: LinearMap
    antipode: LinearMap
    antipode_inverse: Optional[LinearMap] = None

    def __post_init__(self) -> None:
        d = self.algebra.dim
        expected = {
            "coproduct": (self.coproduct, (d * d, d)),
            "counit": (self.counit, (1, d)),
            "antipode": (self.antipode, (d, d)),
        }
        for name, (matrix, shape) in expected.items():
            if matrix.shape != shape:
                raise DimensionMismatchError(f"{name} has shape {matrix.shape}, expected {shape}")
        if self.antipode_inverse is None:
            inv = inverse(self.antipode)
            if inv is None:
                raise StructureError("antipode is not bijective")
            object.__setattr__(self, "antipode_inverse", inv)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def name(self) -> str:
        return self.algebra.name

    @property
    def unit(self):
        return self.algebra.unit

    def identity_map(self) -> LinearMap:
        return self.algebra.identity_map()

    def axiom_errors(self) -> List[str]:
        errors = list(self.algebra.axiom_errors())
        h = self.algebra
        identity = h.identity_map()
        delta, eps, s = self.coproduct, self.counit, self.antipode
        if tensor(delta, identity) @ delta != tensor(identity, delta) @ delta:
            errors.append("coproduct is not coassociative")
        if tensor(eps, identity) @ delta != identity or tensor(identity, eps) @ delta != identity:
            errors.append("counit laws fail")
        hh = tensor_algebra(h, h)
        if delta @ h.multiplication != hh.multiplication @ tensor(delta, delta):
            errors.append("coproduct is not multiplicative")
        if delta.apply(h.unit) != hh.unit:
            errors.append("coproduct is not unital")
        if eps @ h.multiplication != tensor(eps, eps):
            errors.append("counit is not multiplicative")
        if eps.apply(h.unit) != (self.field.one,):
            errors.append("counit is not unital")
        unit_counit = h.unit_map() @ eps
        if h.multiplication @ tensor(s, identity) @ delta != unit_counit:
            errors.append("left antipode identity fails")
        if h.multiplication @ tensor(identity, s) @ delta != unit_counit:
            errors.append("right antipode identity fails")
        if s @ self.antipode_inverse != identity or self.antipode_inverse @ s != identity:
            errors.append("antipode_inverse is not inverse to the antipode")
        return errors

    def validate(self) -> "HopfData":
        errors = self.axiom_errors()
        if errors:
            raise StructureError(f"Hopf algebra {self.name or '?'} fails: {'; '.join(errors)}")
        return self


def group_algebra(field: FieldSpec, group: FiniteGroup) -> HopfData:
    """k[G]: group-like basis, Δ(g) = g ⊗ g, S(g) = g⁻¹."""
    n = group.order
    one = field.one
    multiplication = LinearMap.from_entries(
        field, n, n * n, _accumulate((group.multiply(a, b), a * n + b) for a in range(n) for b in range(n))
    )
    algebra = Algebra(field, n, multiplication, tuple(one if g == 0 else field.zero for g in range(n)),
                      name=f"k[{group.label}]")
    coproduct = LinearMap.from_entries(field, n * n, n, {g * n + g: {g: one} for g in range(n)})
    counit = LinearMap.from_entries(field, 1, n, {0: {g: one for g in range(n)}})
    antipode = LinearMap.from_entries(field, n, n, _accumulate((group.inverse(g), g) for g in range(n)))
    return HopfData(algebra, coproduct, counit, antipode)


def function_hopf_algebra(field: FieldSpec, group: FiniteGroup) -> HopfData:
    """k^G: delta functions, Δ(δ_g) = Σ_{ab=g} δ_a ⊗ δ_b, ε(δ_g) = [g = e]."""
    n = group.order
    one = field.one
    multiplication = LinearMap.from_entries(field, n, n * n, {g: {g * n + g: one} for g in range(n)})
    algebra = Algebra(field, n, multiplication, tuple([one] * n), name=f"k^{group.label}")
    coproduct = LinearMap.from_entries(
        field, n * n, n, _accumulate((a * n + b, group.multiply(a, b)) for a in range(n) for b in range(n))
    )
    counit = LinearMap.from_entries(field, 1, n, {0: {group.identity: one}})
    antipode = LinearMap.from_entries(field, n, n, _accumulate((group.inverse(g), g) for g in range(n)))
    return HopfData(algebra, coproduct, counit, antipode)


def trivial_hopf_algebra(field: FieldSpec) -> HopfData:
    one = LinearMap.identity(field, 1)
    return HopfData(Algebra(field, 1, one, (field.one,), name="k"), one, one, one)


def _accumulate(pairs):
    """Entries dict with 1 at every (row, column) pair."""
    entries = {}
    for row, column in pairs:
        entries.setdefault(row, {})[column] = 1
    return entries
