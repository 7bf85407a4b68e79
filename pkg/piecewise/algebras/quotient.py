"""Generated ideals and quotient algebras."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from exceptions import DimensionMismatchError, NotAnIdealError
from piecewise.algebras.algebra import Algebra, AlgebraMorphism, Ideal
from piecewise.linalg import LinearMap, Subspace, quotient_with_section, tensor


def ideal_generated(parent: Algebra, vectors: Sequence[Sequence]) -> Ideal:
    """Smallest two-sided ideal containing `vectors`."""
    multipliers = []
    for i in range(parent.dim):
        e = parent.basis_vector(i)
        multipliers.append(parent.left_multiplication(e))
        multipliers.append(parent.right_multiplication(e))
    space = Subspace.span(parent.field, parent.dim, list(vectors))
    while True:
        grown = list(space.basis) + [m.apply(v) for m in multipliers for v in space.basis]
        closure = Subspace.span(parent.field, parent.dim, grown)
        if closure.dim == space.dim:
            return Ideal(parent, space)
        space = closure


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    """P/J with its projection and a linear section sending 1 + J to 1."""

    algebra: Algebra
    projection: AlgebraMorphism
    section: LinearMap
    ideal: Ideal


def quotient_algebra(parent: Algebra, ideal: Ideal, name: str = "") -> QuotientAlgebra:
    if ideal.parent is not parent and not ideal.parent.same_structure(parent):
        raise DimensionMismatchError("ideal belongs to a different algebra")
    if not ideal.is_two_sided():
        raise NotAnIdealError("cannot form a quotient by a one-sided ideal")
    data = quotient_with_section(parent.dim, ideal.space, unit=parent.unit)
    multiplication = data.projection @ parent.multiplication @ tensor(data.section, data.section)
    quotient = Algebra(
        parent.field,
        data.dim,
        multiplication,
        data.projection.apply(parent.unit),
        name=name or f"{parent.name}/J",
    )
    return QuotientAlgebra(quotient, AlgebraMorphism(parent, quotient, data.projection), data.section, ideal)


def induced_quotient_map(source: QuotientAlgebra, target: QuotientAlgebra) -> AlgebraMorphism:
    """P/J -> P/J' for J inside J' (both quotients of the same P)."""
    if not target.ideal.space.contains_subspace(source.ideal.space):
        raise DimensionMismatchError("the source ideal is not contained in the target ideal")
    matrix = target.projection.matrix @ source.section
    return AlgebraMorphism(source.algebra, target.algebra, matrix)
