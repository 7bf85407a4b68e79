"""Fibre products, multi-pullbacks and the surjectivity criterion for induced maps."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from exceptions import DimensionMismatchError
from piecewise.algebras.algebra import Algebra, AlgebraMorphism, direct_sum_all, same_algebra, subalgebra
from piecewise.linalg import CombineMode, LinearMap, Subspace, block_projection, stack_columns, stack_rows, subspace_combine

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FibreProduct:
    """{(p, q) | π12(p) = π21(q)} inside P1 ⊕ P2, in echelon coordinates."""

    algebra: Algebra
    pr1: AlgebraMorphism
    pr2: AlgebraMorphism
    space: Subspace

    @property
    def embedding(self) -> LinearMap:
        return self.space.inclusion()

    def coordinates(self) -> LinearMap:
        """P1 ⊕ P2 -> P, valid on pairs that lie in the fibre product."""
        return self.space.coordinate_projection()

    def pair_to_element(self, first: Sequence, second: Sequence):
        return self.space.coordinates(tuple(first) + tuple(second))


def fibre_product(pi12: AlgebraMorphism, pi21: AlgebraMorphism) -> FibreProduct:
    if not same_algebra(pi12.target, pi21.target):
        raise DimensionMismatchError("fibre product needs a common target algebra")
    p1, p2 = pi12.source, pi21.source
    field = p1.field
    constraint = stack_columns([pi12.matrix, pi21.matrix.scale(-1)])
    space = constraint.kernel()
    algebra, inclusion = subalgebra(direct_sum_all([p1, p2]), space, name=f"{p1.name}x{p2.name}")
    sizes = [p1.dim, p2.dim]
    pr1 = AlgebraMorphism(algebra, p1, block_projection(field, sizes, 0) @ inclusion.matrix)
    pr2 = AlgebraMorphism(algebra, p2, block_projection(field, sizes, 1) @ inclusion.matrix)
    return FibreProduct(algebra, pr1, pr2, space)


@dataclass(frozen=True, eq=False)
class MultiPullback:
    algebra: Algebra
    projections: Tuple[AlgebraMorphism, ...]
    space: Subspace


def multi_pullback(pieces: Sequence[Algebra],
                   overlaps: Dict[Tuple[int, int], Tuple[AlgebraMorphism, AlgebraMorphism]]) -> MultiPullback:
    """Tuples (p_i) with π^i_j(p_i) = π^j_i(p_j) for every listed pair i < j (0-based)."""
    field = pieces[0].field
    sizes = [p.dim for p in pieces]
    blocks: List[LinearMap] = []
    for (i, j), (from_i, from_j) in sorted(overlaps.items()):
        if not same_algebra(from_i.target, from_j.target):
            raise DimensionMismatchError(f"overlap maps for pair ({i}, {j}) have different targets")
        blocks.append(from_i.matrix @ block_projection(field, sizes, i)
                      - from_j.matrix @ block_projection(field, sizes, j))
    total = sum(sizes)
    constraint = stack_rows(blocks) if blocks else LinearMap.zero(field, 0, total)
    space = constraint.kernel()
    algebra, inclusion = subalgebra(direct_sum_all(list(pieces)), space, name="multipullback")
    projections = tuple(
        AlgebraMorphism(algebra, piece, block_projection(field, sizes, k) @ inclusion.matrix)
        for k, piece in enumerate(pieces)
    )
    return MultiPullback(algebra, projections, space)


@dataclass(frozen=True)
class SurjectivityCertificate:
    """Whether V -> V1 x_{V12} V2 is onto, with the kernel identities that decide it."""

    commutes: bool
    surjective: bool
    kernel_composite: Subspace
    kernel_sum: Subspace
    kernel_eta: Subspace
    kernel_intersection: Subspace

    @property
    def criterion_holds(self) -> bool:
        return self.kernel_composite == self.kernel_sum

    @property
    def consistent(self) -> bool:
        return self.criterion_holds == self.surjective and self.kernel_eta == self.kernel_intersection


def surjectivity_criterion(phi1: AlgebraMorphism, phi2: AlgebraMorphism,
                           pi1: AlgebraMorphism, pi2: AlgebraMorphism) -> SurjectivityCertificate:
    if not same_algebra(phi1.source, phi2.source):
        raise DimensionMismatchError("phi1 and phi2 need a common source")
    commutes = (pi1.matrix @ phi1.matrix) == (pi2.matrix @ phi2.matrix)
    product = fibre_product(pi1, pi2)
    eta = product.coordinates() @ stack_rows([phi1.matrix, phi2.matrix])
    kernel1, kernel2 = phi1.matrix.kernel(), phi2.matrix.kernel()
    certificate = SurjectivityCertificate(
        commutes=commutes,
        surjective=eta.is_surjective(),
        kernel_composite=(pi1.matrix @ phi1.matrix).kernel(),
        kernel_sum=subspace_combine(kernel1, kernel2, CombineMode.SUM),
        kernel_eta=eta.kernel(),
        kernel_intersection=subspace_combine(kernel1, kernel2, CombineMode.INTERSECTION),
    )
    logger.debug("Surjectivity criterion evaluated", extra={
        "component": "Pullback",
        "data": {
            "surjective": certificate.surjective,
            "criterion_holds": certificate.criterion_holds,
            "kernel_composite_dim": certificate.kernel_composite.dim,
            "kernel_sum_dim": certificate.kernel_sum.dim,
        },
    })
    return certificate
