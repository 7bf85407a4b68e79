"""Coverings of algebras by surjections, their reconstruction and Chinese-remainder gluing."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from exceptions import (
    DimensionMismatchError,
    GluingError,
    IncompatibleDataError,
    MorphismError,
    NonDistributiveCoveringError,
)
from piecewise.algebras.algebra import Algebra, AlgebraMorphism, Ideal, same_algebra
from piecewise.algebras.pullback import fibre_product, multi_pullback
from piecewise.algebras.quotient import QuotientAlgebra, induced_quotient_map, quotient_algebra
from piecewise.lattice import Antichain, DistributivityVerdict, LatticeOracle, R_map, distributivity_check
from piecewise.linalg import (
    CombineMode,
    LinearMap,
    Subspace,
    Vector,
    right_inverse,
    solve_affine,
    stack_rows,
    subspace_combine,
    subspace_intersection,
)
from piecewise.topology import OpenSet, antichain_from_open

logger = logging.getLogger(__name__)


def ideal_oracle(parent: Algebra, generators: Sequence[Subspace]) -> LatticeOracle[Subspace]:
    """Ideals ordered by reverse inclusion: meet is the sum, join the intersection."""
    return LatticeOracle(
        generators=tuple(generators),
        meet=lambda a, b: subspace_combine(a, b, CombineMode.SUM),
        join=lambda a, b: subspace_combine(a, b, CombineMode.INTERSECTION),
        leq=lambda a, b: a.contains_subspace(b),
        bottom=Subspace.full(parent.field, parent.dim),
        name="ideals",
    )


@dataclass(frozen=True, eq=False)
class CoveringData:
    """An algebra with N surjections, their kernels and the lattice verdicts."""

    algebra: Algebra
    morphisms: Tuple[AlgebraMorphism, ...]
    kernels: Tuple[Ideal, ...]
    surjective: Tuple[bool, ...]
    weak: bool
    distributivity: DistributivityVerdict
    _quotients: Dict[Antichain, QuotientAlgebra] = dc_field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.morphisms)

    @property
    def distributive(self) -> bool:
        return self.distributivity.distributive

    @property
    def is_covering(self) -> bool:
        return all(self.surjective) and self.weak and self.distributive

    def oracle(self) -> LatticeOracle[Subspace]:
        return ideal_oracle(self.algebra, [k.space for k in self.kernels])

    def section_ideal(self, antichain: Antichain) -> Ideal:
        """R(l) under the ideal orientation: the intersection over members of the kernel sums."""
        return Ideal(self.algebra, R_map(self.oracle(), antichain))

    def section_quotient(self, antichain: Antichain) -> QuotientAlgebra:
        cached = self._quotients.get(antichain)
        if cached is None:
            cached = quotient_algebra(self.algebra, self.section_ideal(antichain), name=f"P/R{antichain.key}")
            self._quotients[antichain] = cached
        return cached

    def quotient_at(self, open_set: OpenSet) -> QuotientAlgebra:
        return self.section_quotient(antichain_from_open(open_set))


def covering_check(algebra: Algebra, morphisms: Sequence[AlgebraMorphism], cap: int = 6) -> CoveringData:
    """Verify surjectivity, weakness and distributivity of a family of algebra maps out of P."""
    for index, morphism in enumerate(morphisms, start=1):
        if not same_algebra(morphism.source, algebra):
            raise DimensionMismatchError(f"morphism {index} does not start at the covered algebra")
        errors = morphism.axiom_errors()
        if errors:
            raise MorphismError(f"morphism {index}: {'; '.join(errors)}")
    kernels = tuple(m.kernel() for m in morphisms)
    surjective = tuple(m.is_surjective() for m in morphisms)
    weak = subspace_intersection([k.space for k in kernels], algebra.field, algebra.dim).is_zero()
    verdict = distributivity_check(ideal_oracle(algebra, [k.space for k in kernels]), cap)
    logger.debug("Covering checked", extra={
        "component": "Covering",
        "data": {"N": len(morphisms), "surjective": list(surjective), "weak": weak,
                 "distributive": verdict.distributive},
    })
    return CoveringData(algebra, tuple(morphisms), kernels, surjective, weak, verdict)


@dataclass(frozen=True, eq=False)
class Reconstruction:
    algebra: Algebra
    isomorphism: AlgebraMorphism
    is_isomorphism: bool
    overlap_dims: Tuple[int, ...]


def reconstruct(covering: CoveringData) -> Reconstruction:
    """Rebuild P as iterated fibre products over P/((J_1∩…∩J_k)+J_{k+1})."""
    parent = covering.algebra
    field = parent.field
    current: Algebra = covering.morphisms[0].target
    to_current: LinearMap = covering.morphisms[0].matrix
    accumulated = covering.kernels[0].space
    overlap_dims: List[int] = []
    for morphism, kernel in zip(covering.morphisms[1:], covering.kernels[1:]):
        overlap = quotient_algebra(
            parent, Ideal(parent, subspace_combine(accumulated, kernel.space, CombineMode.SUM)), name="overlap"
        )
        overlap_dims.append(overlap.algebra.dim)
        left_section = right_inverse(to_current)
        right_section = right_inverse(morphism.matrix)
        if left_section is None or right_section is None:
            raise MorphismError("reconstruction needs surjective maps")
        left = AlgebraMorphism(current, overlap.algebra, overlap.projection.matrix @ left_section)
        right = AlgebraMorphism(morphism.target, overlap.algebra, overlap.projection.matrix @ right_section)
        product = fibre_product(left, right)
        to_current = product.coordinates() @ stack_rows([to_current, morphism.matrix])
        current = product.algebra
        accumulated = subspace_combine(accumulated, kernel.space, CombineMode.INTERSECTION)
    isomorphism = AlgebraMorphism(parent, current, to_current)
    return Reconstruction(current, isomorphism, isomorphism.is_isomorphism(), tuple(overlap_dims))


def pairwise_reconstruction(covering: CoveringData) -> Tuple[AlgebraMorphism, bool]:
    """Map P into the multi-pullback over the pairwise overlaps P/(J_i+J_j); report bijectivity."""
    parent = covering.algebra
    n = covering.n
    sections = []
    for morphism in covering.morphisms:
        section = right_inverse(morphism.matrix)
        if section is None:
            raise MorphismError("pairwise reconstruction needs surjective maps")
        sections.append(section)
    overlaps = {}
    for i in range(n):
        for j in range(i + 1, n):
            ideal = Ideal(parent, subspace_combine(covering.kernels[i].space, covering.kernels[j].space, CombineMode.SUM))
            overlap = quotient_algebra(parent, ideal, name=f"P/(J{i + 1}+J{j + 1})")
            overlaps[(i, j)] = (
                AlgebraMorphism(covering.morphisms[i].target, overlap.algebra, overlap.projection.matrix @ sections[i]),
                AlgebraMorphism(covering.morphisms[j].target, overlap.algebra, overlap.projection.matrix @ sections[j]),
            )
    pullback = multi_pullback([m.target for m in covering.morphisms], overlaps)
    matrix = pullback.space.coordinate_projection() @ stack_rows([m.matrix for m in covering.morphisms])
    morphism = AlgebraMorphism(parent, pullback.algebra, matrix)
    return morphism, morphism.is_isomorphism()


@dataclass(frozen=True)
class GlueResult:
    """A glued section over `open_set` in P(U) coordinates, with a representative in P."""

    open_set: OpenSet
    element: Vector
    representative: Vector
    unique: bool


def restrict_section(covering: CoveringData, source: OpenSet, target: OpenSet, element: Sequence) -> Vector:
    """Restriction P(source) -> P(target) for target inside source."""
    if not target.issubset(source):
        raise DimensionMismatchError("restriction target is not inside the source open set")
    return induced_quotient_map(covering.quotient_at(source), covering.quotient_at(target)).apply(element)


def crt_glue(covering: CoveringData, opens: Sequence[OpenSet], elements: Sequence[Sequence],
             target: Optional[OpenSet] = None) -> GlueResult:
    """Glue sections p_i over U_i into the unique section over their union."""
    if not covering.distributive:
        raise NonDistributiveCoveringError("gluing is refused on a non-distributive covering")
    if not opens or len(opens) != len(elements):
        raise GluingError("need one local element per open set")
    union = opens[0]
    for open_set in opens[1:]:
        union = union.union(open_set)
    if target is not None and target != union:
        raise GluingError("the open sets do not cover the target open set")
    quotients = [covering.quotient_at(u) for u in opens]
    for index, (quotient, element) in enumerate(zip(quotients, elements), start=1):
        if len(element) != quotient.algebra.dim:
            raise DimensionMismatchError(
                f"element {index} has {len(element)} coordinates, section algebra has {quotient.algebra.dim}"
            )
    for i in range(len(opens)):
        for j in range(i + 1, len(opens)):
            overlap = opens[i].intersection(opens[j])
            if restrict_section(covering, opens[i], overlap, elements[i]) != \
                    restrict_section(covering, opens[j], overlap, elements[j]):
                raise IncompatibleDataError(f"local elements {i + 1} and {j + 1} disagree on their overlap")

    accumulated_open = opens[0]
    representative = quotients[0].section.apply(elements[0])
    for open_set, quotient, element in zip(opens[1:], quotients[1:], elements[1:]):
        current = covering.quotient_at(accumulated_open)
        system = stack_rows([current.projection.matrix, quotient.projection.matrix])
        value = tuple(current.projection.apply(representative)) + tuple(element)
        solution = solve_affine(system, value)
        if solution is None:
            raise GluingError("pairwise gluing system is infeasible")
        representative = solution
        accumulated_open = accumulated_open.union(open_set)

    for index, (quotient, element) in enumerate(zip(quotients, elements), start=1):
        if quotient.projection.apply(representative) != tuple(element):
            raise GluingError(f"glued element does not restrict to local element {index}")
    whole = covering.quotient_at(union)
    restrictions = stack_rows([induced_quotient_map(whole, q).matrix for q in quotients])
    return GlueResult(union, whole.projection.apply(representative), representative, restrictions.is_injective())
