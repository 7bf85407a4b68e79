"""Concrete algebras: functions on finite sets and square-zero extensions."""

from __future__ import annotations

from typing import Hashable, List, Sequence, Tuple

from exceptions import DimensionMismatchError
from piecewise.algebras.algebra import Algebra, AlgebraMorphism, Ideal
from piecewise.linalg import FieldSpec, LinearMap, Subspace


def function_algebra(field: FieldSpec, points: Sequence[Hashable], name: str = "") -> Algebra:
    """Fun(X) with the delta-function basis in the order of `points`."""
    points = tuple(points)
    if len(set(points)) != len(points):
        raise DimensionMismatchError("points of a function algebra must be distinct")
    n = len(points)
    entries = {i: {i * n + i: field.one} for i in range(n)}
    return Algebra(
        field, n, LinearMap.from_entries(field, n, n * n, entries), tuple([field.one] * n),
        labels=points, name=name or f"Fun({','.join(map(str, points))})",
    )


def restriction(source: Algebra, target: Algebra) -> AlgebraMorphism:
    """Restriction of functions Fun(X) -> Fun(Y) for Y inside X, matched by labels."""
    if source.labels is None or target.labels is None:
        raise DimensionMismatchError("restriction needs labelled function algebras")
    position = {label: i for i, label in enumerate(source.labels)}
    missing = [y for y in target.labels if y not in position]
    if missing:
        raise DimensionMismatchError(f"points {missing} are not in the source set")
    entries = {k: {position[y]: source.field.one} for k, y in enumerate(target.labels)}
    return AlgebraMorphism(source, target, LinearMap.from_entries(source.field, target.dim, source.dim, entries))


def function_covering(field: FieldSpec, points: Sequence[Hashable],
                      covers: Sequence[Sequence[Hashable]]) -> Tuple[Algebra, List[AlgebraMorphism]]:
    """Fun(X) with the restrictions to the given subsets (kept in the order of X)."""
    whole = function_algebra(field, points)
    morphisms = []
    for cover in covers:
        members = set(cover)
        piece = function_algebra(field, [x for x in points if x in members])
        morphisms.append(restriction(whole, piece))
    return whole, morphisms


def vanishing_ideal(algebra: Algebra, subset: Sequence[Hashable]) -> Ideal:
    """Functions vanishing on `subset`."""
    if algebra.labels is None:
        raise DimensionMismatchError("vanishing ideals need a labelled function algebra")
    keep = set(subset)
    vectors = [algebra.basis_vector(i) for i, label in enumerate(algebra.labels) if label not in keep]
    return Ideal(algebra, Subspace.span(algebra.field, algebra.dim, vectors))


def square_zero_algebra(field: FieldSpec, rank: int) -> Algebra:
    """k ⊕ V with V·V = 0; basis 1, v_1, ..., v_rank."""
    n = rank + 1
    structure = [(0, 0, 0, 1)]
    for i in range(1, n):
        structure += [(0, i, i, 1), (i, 0, i, 1)]
    return Algebra.from_structure(field, n, [1] + [0] * rank, structure, name=f"k+V{rank}")


def square_zero_line_quotients(field: FieldSpec) -> Tuple[Algebra, List[AlgebraMorphism]]:
    """k ⊕ k² with the quotients by the lines spanned by v1, v2 and v1 + v2."""
    parent = square_zero_algebra(field, 2)
    target = square_zero_algebra(field, 1)
    matrices = [
        [[1, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 0]],
        [[1, 0, 0], [0, 1, -1]],
    ]
    morphisms = [AlgebraMorphism(parent, target, LinearMap.from_rows(field, rows)) for rows in matrices]
    return parent, morphisms
