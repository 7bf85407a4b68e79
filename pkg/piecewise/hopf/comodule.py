"""Right comodule algebras, their coinvariants, colinear maps and the canonical map."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

from exceptions import DimensionMismatchError, MorphismError, NotAnIdealError, StructureError
from piecewise.algebras import (
    Algebra,
    AlgebraMorphism,
    FibreProduct,
    Ideal,
    fibre_product,
    function_algebra,
    quotient_algebra,
    restriction,
    same_algebra,
    subalgebra,
    tensor_algebra,
)
from piecewise.hopf.groups import GSet
from piecewise.hopf.hopf_algebra import HopfData, function_hopf_algebra
from piecewise.linalg import (
    FieldSpec,
    LinearMap,
    QuotientData,
    Subspace,
    block_injection,
    block_projection,
    column_map,
    quotient_with_section,
    swap,
    tensor,
    tensor_subspace,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Coinvariants:
    """B = {p | Δ_P(p) = p ⊗ 1} as a subspace, an algebra and its inclusion into P."""

    space: Subspace
    algebra: Algebra
    inclusion: AlgebraMorphism

    @property
    def dim(self) -> int:
        return self.space.dim


@dataclass(frozen=True, eq=False)
class ComoduleAlgebra:
    """An algebra P with a right coaction Δ_P: P -> P ⊗ H that is an algebra map."""

    algebra: Algebra
    hopf: HopfData
    coaction: LinearMap
    name: str = ""

    def __post_init__(self) -> None:
        expected = (self.algebra.dim * self.hopf.dim, self.algebra.dim)
        if self.coaction.shape != expected:
            raise DimensionMismatchError(f"coaction has shape {self.coaction.shape}, expected {expected}")
        self.algebra.field.require_same(self.hopf.field)

    @property
    def field(self) -> FieldSpec:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def identity_map(self) -> LinearMap:
        return self.algebra.identity_map()

    def unit_times_one(self) -> LinearMap:
        """p ↦ p ⊗ 1_H."""
        return tensor(self.identity_map(), column_map(self.field, self.hopf.unit))

    def left_coaction(self) -> LinearMap:
        """p ↦ S⁻¹(p₍₁₎) ⊗ p₍₀₎ in H ⊗ P."""
        twisted = tensor(self.identity_map(), self.hopf.antipode_inverse) @ self.coaction
        return swap(self.field, self.dim, self.hopf.dim) @ twisted

    def axiom_errors(self) -> List[str]:
        errors = list(self.algebra.axiom_errors())
        if self.dim == 0:
            return errors
        h = self.hopf
        identity = self.identity_map()
        delta = self.coaction
        if tensor(identity, h.counit) @ delta != identity:
            errors.append("coaction is not counital")
        if tensor(delta, h.identity_map()) @ delta != tensor(identity, h.coproduct) @ delta:
            errors.append("coaction is not coassociative")
        p_h = tensor_algebra(self.algebra, h.algebra)
        if delta @ self.algebra.multiplication != p_h.multiplication @ tensor(delta, delta):
            errors.append("coaction is not multiplicative")
        if delta.apply(self.algebra.unit) != p_h.unit:
            errors.append("coaction is not unital")
        return errors

    def validate(self) -> "ComoduleAlgebra":
        errors = self.axiom_errors()
        if errors:
            raise StructureError(f"comodule algebra {self.name or self.algebra.name or '?'} fails: {'; '.join(errors)}")
        return self

    @cached_property
    def coinvariants(self) -> Coinvariants:
        space = (self.coaction - self.unit_times_one()).kernel()
        algebra, inclusion = subalgebra(self.algebra, space, name=f"{self.name or self.algebra.name}^coH")
        return Coinvariants(space, algebra, inclusion)

    def __repr__(self) -> str:
        return f"ComoduleAlgebra({self.name or self.algebra.name or '?'}, dim={self.dim}, H={self.hopf.name})"


def coinvariants(comodule: ComoduleAlgebra) -> Coinvariants:
    return comodule.coinvariants


def regular_comodule_algebra(hopf: HopfData) -> ComoduleAlgebra:
    """H coacting on itself by Δ."""
    return ComoduleAlgebra(hopf.algebra, hopf, hopf.coproduct, name=f"{hopf.name} (regular)")


def trivial_comodule_algebra(algebra: Algebra, hopf: HopfData) -> ComoduleAlgebra:
    """p ↦ p ⊗ 1."""
    coaction = tensor(algebra.identity_map(), column_map(algebra.field, hopf.unit))
    return ComoduleAlgebra(algebra, hopf, coaction, name=f"{algebra.name} (trivial)")


def function_comodule_algebra(field: FieldSpec, gset: GSet, name: str = "") -> ComoduleAlgebra:
    """Fun(X) over k^G with Δ_P(f)(y, g) = f(y·g), i.e. Δ_P(δ_x) = Σ_{y·g=x} δ_y ⊗ δ_g."""
    hopf = function_hopf_algebra(field, gset.group)
    algebra = function_algebra(field, gset.points, name=name or f"Fun(X{gset.size})")
    order = gset.group.order
    entries = {}
    for y in range(gset.size):
        for g in range(order):
            entries.setdefault(y * order + g, {})[gset.action[y][g]] = field.one
    coaction = LinearMap.from_entries(field, gset.size * order, gset.size, entries)
    return ComoduleAlgebra(algebra, hopf, coaction, name=algebra.name)


# colinear maps --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ComoduleMorphism:
    """An algebra map between comodule algebras over the same H that commutes with the coactions."""

    source: ComoduleAlgebra
    target: ComoduleAlgebra
    morphism: AlgebraMorphism

    @property
    def matrix(self) -> LinearMap:
        return self.morphism.matrix

    def colinearity_errors(self) -> List[str]:
        errors = list(self.morphism.axiom_errors())
        if self.source.hopf is not self.target.hopf and not same_algebra(self.source.hopf.algebra,
                                                                          self.target.hopf.algebra):
            errors.append("source and target coact with different Hopf algebras")
            return errors
        left = self.target.coaction @ self.matrix
        right = tensor(self.matrix, self.source.hopf.identity_map()) @ self.source.coaction
        if left != right:
            errors.append("not colinear")
        return errors

    def validate(self) -> "ComoduleMorphism":
        errors = self.colinearity_errors()
        if errors:
            raise MorphismError(f"{self.source!r} -> {self.target!r}: {'; '.join(errors)}")
        return self

    def is_surjective(self) -> bool:
        return self.morphism.is_surjective()

    def kernel(self) -> Ideal:
        return self.morphism.kernel()


def coinvariant_map(morphism: ComoduleMorphism) -> LinearMap:
    """π^coH: P^coH -> Q^coH in echelon coordinates."""
    source = morphism.source.coinvariants
    target = morphism.target.coinvariants
    return target.space.coordinate_projection() @ morphism.matrix @ source.space.inclusion()


def coinvariant_surjectivity(morphism: ComoduleMorphism) -> bool:
    """π(P^coH) = Q^coH exactly."""
    image = morphism.source.coinvariants.space.image_under(morphism.matrix)
    return image == morphism.target.coinvariants.space


def restricted_morphism(morphism: ComoduleMorphism) -> AlgebraMorphism:
    """π^coH as an algebra map between the coinvariant subalgebras."""
    return AlgebraMorphism(
        morphism.source.coinvariants.algebra, morphism.target.coinvariants.algebra, coinvariant_map(morphism)
    )


# comodule ideals and quotients ----------------------------------------------------


def is_comodule_ideal(comodule: ComoduleAlgebra, ideal: Ideal) -> bool:
    if not ideal.is_two_sided():
        return False
    inside = tensor_subspace(ideal.space, Subspace.full(comodule.field, comodule.hopf.dim))
    return all(inside.contains(comodule.coaction.apply(v)) for v in ideal.space.basis)


def comodule_ideal(comodule: ComoduleAlgebra, space: Subspace) -> Ideal:
    ideal = Ideal(comodule.algebra, space)
    if not is_comodule_ideal(comodule, ideal):
        raise NotAnIdealError("subspace is not an ideal and a subcomodule")
    return ideal


@dataclass(frozen=True, eq=False)
class QuotientComodule:
    comodule: ComoduleAlgebra
    projection: ComoduleMorphism
    section: LinearMap
    ideal: Ideal


def quotient_comodule_algebra(comodule: ComoduleAlgebra, ideal: Ideal, name: str = "") -> QuotientComodule:
    """P/J with the coaction (proj ⊗ id)∘Δ_P∘section."""
    if not is_comodule_ideal(comodule, ideal):
        raise NotAnIdealError("cannot form a comodule quotient by a non-comodule ideal")
    quotient = quotient_algebra(comodule.algebra, ideal, name=name or f"{comodule.name}/J")
    coaction = tensor(quotient.projection.matrix, comodule.hopf.identity_map()) @ comodule.coaction @ quotient.section
    target = ComoduleAlgebra(quotient.algebra, comodule.hopf, coaction, name=quotient.algebra.name)
    return QuotientComodule(target, ComoduleMorphism(comodule, target, quotient.projection), quotient.section, ideal)


def function_comodule_ideals(comodule: ComoduleAlgebra, gset: GSet) -> List[Tuple[Tuple[int, ...], Ideal]]:
    """Vanishing ideals of every G-stable subset of X, keyed by the subset."""
    result = []
    for subset in gset.stable_subsets():
        members = set(subset)
        vectors = [comodule.algebra.basis_vector(x) for x in range(gset.size) if x not in members]
        result.append((subset, Ideal(comodule.algebra, Subspace.span(comodule.field, comodule.dim, vectors))))
    return result


# canonical map --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CanonicalMap:
    """can~: P⊗P -> P⊗H, its descent can: P⊗_B P -> P⊗H, and the balanced quotient."""

    can_tilde: LinearMap
    can: LinearMap
    balanced: QuotientData
    relations: Subspace
    galois: bool


def balanced_relations(comodule: ComoduleAlgebra) -> Subspace:
    """span{pb ⊗ q - p ⊗ bq} inside P⊗P."""
    p = comodule.algebra
    identity = p.identity_map()
    vectors = []
    for b in comodule.coinvariants.space.basis:
        relation = tensor(p.right_multiplication(b), identity) - tensor(identity, p.left_multiplication(b))
        vectors.extend(relation.columns())
    return Subspace.span(comodule.field, comodule.dim * comodule.dim, vectors)


def lifted_canonical_map(comodule: ComoduleAlgebra) -> LinearMap:
    """p ⊗ q ↦ p q₍₀₎ ⊗ q₍₁₎."""
    return tensor(comodule.algebra.multiplication, comodule.hopf.identity_map()) @ \
        tensor(comodule.identity_map(), comodule.coaction)


def canonical_map(comodule: ComoduleAlgebra) -> CanonicalMap:
    relations = balanced_relations(comodule)
    balanced = quotient_with_section(comodule.dim * comodule.dim, relations)
    can_tilde = lifted_canonical_map(comodule)
    if not all(not any(can_tilde.apply(v)) for v in relations.basis):
        raise StructureError("lifted canonical map does not vanish on the balanced relations")
    can = can_tilde @ balanced.section
    galois = can.is_bijective()
    logger.debug("Canonical map computed", extra={
        "component": "Hopf",
        "data": {"comodule": comodule.name, "balanced_dim": balanced.dim, "target_dim": can.target_dim,
                 "galois": galois},
    })
    return CanonicalMap(can_tilde, can, balanced, relations, galois)


# fibre products -------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ComoduleFibreProduct:
    comodule: ComoduleAlgebra
    pr1: ComoduleMorphism
    pr2: ComoduleMorphism
    product: FibreProduct


def direct_sum_coaction(pieces: Sequence[ComoduleAlgebra]) -> LinearMap:
    field = pieces[0].field
    hopf = pieces[0].hopf
    sizes = [p.dim for p in pieces]
    total = None
    for k, piece in enumerate(pieces):
        term = tensor(block_injection(field, sizes, k), hopf.identity_map()) @ piece.coaction @ \
            block_projection(field, sizes, k)
        total = term if total is None else total + term
    return total


def comodule_fibre_product(pi12: ComoduleMorphism, pi21: ComoduleMorphism) -> ComoduleFibreProduct:
    """P1 x_{P12} P2 with the coaction inherited from P1 ⊕ P2."""
    for morphism in (pi12, pi21):
        errors = morphism.colinearity_errors()
        if errors:
            raise MorphismError(f"fibre product leg {morphism.source!r}: {'; '.join(errors)}")
    product = fibre_product(pi12.morphism, pi21.morphism)
    p1, p2 = pi12.source, pi21.source
    hopf = p1.hopf
    coaction = tensor(product.coordinates(), hopf.identity_map()) @ direct_sum_coaction([p1, p2]) @ \
        product.embedding
    comodule = ComoduleAlgebra(product.algebra, hopf, coaction, name=f"{p1.name}x{p2.name}")
    return ComoduleFibreProduct(
        comodule,
        ComoduleMorphism(comodule, p1, product.pr1),
        ComoduleMorphism(comodule, p2, product.pr2),
        product,
    )


def function_comodule_covering(field: FieldSpec, gset: GSet,
                               subsets: Sequence[Sequence[int]]) -> Tuple[ComoduleAlgebra, List[ComoduleMorphism]]:
    """Fun(X) with the restrictions to G-stable subsets, each subset kept in the order of X."""
    whole = function_comodule_algebra(field, gset)
    morphisms = []
    for subset in subsets:
        piece = function_comodule_algebra(field, gset.restrict(sorted(subset)))
        morphisms.append(ComoduleMorphism(whole, piece, restriction(whole.algebra, piece.algebra)))
    return whole, morphisms
