"""Module algebras, smash products B # H and trivializations onto them."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import List

from exceptions import DimensionMismatchError, StructureError
from piecewise.algebras import Algebra, AlgebraMorphism
from piecewise.hopf.comodule import ComoduleAlgebra, ComoduleMorphism
from piecewise.hopf.groups import FiniteGroup
from piecewise.hopf.hopf_algebra import HopfData, group_algebra
from piecewise.linalg import FieldSpec, LinearMap, column_map, kron_vectors, swap, tensor, tensor_all

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ModuleAlgebraAction:
    """h ▷ b as a map H⊗B -> B; column h*dim B + b holds e_h ▷ e_b."""

    algebra: Algebra
    hopf: HopfData
    action: LinearMap

    def __post_init__(self) -> None:
        n, d = self.algebra.dim, self.hopf.dim
        if self.action.shape != (n, d * n):
            raise DimensionMismatchError(f"action has shape {self.action.shape}, expected ({n}, {d * n})")

    def axiom_errors(self) -> List[str]:
        b, h = self.algebra, self.hopf
        field = b.field
        n, d = b.dim, h.dim
        identity_b, identity_h = b.identity_map(), h.identity_map()
        errors = []
        if self.action @ tensor(column_map(field, h.unit), identity_b) != identity_b:
            errors.append("1_H does not act as the identity")
        if self.action @ tensor(h.algebra.multiplication, identity_b) != \
                self.action @ tensor(identity_h, self.action):
            errors.append("action is not associative")
        spread = tensor_all([identity_h, swap(field, d, n), identity_b]) @ tensor_all([h.coproduct, identity_b, identity_b])
        if self.action @ tensor(identity_h, b.multiplication) != \
                b.multiplication @ tensor(self.action, self.action) @ spread:
            errors.append("h ▷ (ab) differs from (h₍₁₎ ▷ a)(h₍₂₎ ▷ b)")
        if self.action @ tensor(identity_h, column_map(field, b.unit)) != b.unit_map() @ h.counit:
            errors.append("h ▷ 1 differs from ε(h)1")
        return errors

    def validate(self) -> "ModuleAlgebraAction":
        errors = self.axiom_errors()
        if errors:
            raise StructureError(f"not a module algebra: {'; '.join(errors)}")
        return self


def trivial_action(algebra: Algebra, hopf: HopfData) -> ModuleAlgebraAction:
    """h ▷ b = ε(h) b."""
    return ModuleAlgebraAction(algebra, hopf, tensor(hopf.counit, algebra.identity_map()))


@dataclass(frozen=True, eq=False)
class SmashProduct:
    """B # H on B⊗H (index b*dim H + h) with coaction id⊗Δ and b ↦ b # 1."""

    action: ModuleAlgebraAction
    comodule: ComoduleAlgebra
    base_inclusion: LinearMap

    @property
    def base(self) -> Algebra:
        return self.action.algebra


def smash_product(action: ModuleAlgebraAction, name: str = "") -> SmashProduct:
    """(b # h)(b′ # h′) = b(h₍₁₎ ▷ b′) # h₍₂₎h′; refuses actions that are not module algebras."""
    action.validate()
    b, h = action.algebra, action.hopf
    field = b.field
    n, d = b.dim, h.dim
    identity_b, identity_h = b.identity_map(), h.identity_map()
    chain = tensor_all([identity_b, h.coproduct, identity_b, identity_h])
    chain = tensor_all([identity_b, identity_h, swap(field, d, n), identity_h]) @ chain
    chain = tensor_all([identity_b, action.action, identity_h, identity_h]) @ chain
    multiplication = tensor(b.multiplication, h.algebra.multiplication) @ chain
    label = name or f"{b.name or 'B'}#{h.name}"
    algebra = Algebra(field, n * d, multiplication, kron_vectors(b.unit, h.unit), name=label)
    comodule = ComoduleAlgebra(algebra, h, tensor(identity_b, h.coproduct), name=label).validate()
    inclusion = tensor(identity_b, column_map(field, h.unit))
    logger.debug("Smash product built", extra={
        "component": "Smash",
        "data": {"name": label, "dim_b": n, "dim_h": d},
    })
    return SmashProduct(action, comodule, inclusion)


def cyclic_group_ring(field: FieldSpec, n: int) -> Algebra:
    """k[u]/(u^n - 1) in the basis 1, u, ..., u^{n-1}."""
    structure = [(i, j, (i + j) % n, 1) for i in range(n) for j in range(n)]
    return Algebra.from_structure(field, n, [1] + [0] * (n - 1), structure, name=f"k[u]/(u^{n}-1)")


def root_of_unity_smash(field: FieldSpec, n: int) -> SmashProduct:
    """k[u]/(u^n - 1) # k[Z/n] with the generator acting by u ↦ q u for a primitive n-th root q."""
    q = field.primitive_root_of_unity(n)
    base = cyclic_group_ring(field, n)
    hopf = group_algebra(field, FiniteGroup.cyclic(n))
    entries = {}
    for g in range(n):
        for i in range(n):
            entries.setdefault(i, {})[g * n + i] = q ** ((g * i) % n)
    action = ModuleAlgebraAction(base, hopf, LinearMap.from_entries(field, n, n * n, entries))
    return smash_product(action, name=f"k[u]/(u^{n}-1)#k[Z{n}]")


@dataclass
class TrivializationVerdict:
    failures: List[str] = dc_field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def verify_trivialization(piece: ComoduleAlgebra, smash: SmashProduct, matrix: LinearMap) -> TrivializationVerdict:
    """Check that `matrix` is a colinear algebra isomorphism from `piece` onto the smash product."""
    verdict = TrivializationVerdict()
    target = smash.comodule
    if matrix.shape != (target.dim, piece.dim):
        verdict.failures.append(f"map has shape {matrix.shape}, expected {(target.dim, piece.dim)}")
        return verdict
    if piece.hopf.dim != target.hopf.dim:
        verdict.failures.append("the piece and the smash product coact with different Hopf algebras")
        return verdict
    morphism = ComoduleMorphism(piece, target, AlgebraMorphism(piece.algebra, target.algebra, matrix))
    verdict.failures.extend(morphism.colinearity_errors())
    if not matrix.is_bijective():
        verdict.failures.append("not bijective")
    return verdict
