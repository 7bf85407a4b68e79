"""The finite space of nonzero bit vectors of length N, its open sets and the signature embedding."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Set, Tuple, TypeVar

from exceptions import CoveringError, FormatError
from piecewise.lattice import Antichain, L_map, LatticeOracle, R_map
from piecewise.lattice.antichain import check_cap, mask_to_subset

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True, order=True)
class Point:
    """Nonzero bit vector; bit i-1 of `bits` is the coordinate z_i."""

    n: int
    bits: int

    def __post_init__(self) -> None:
        if not 0 < self.bits < (1 << self.n):
            raise FormatError(f"point bits {self.bits} invalid for N={self.n}")

    @property
    def coordinates(self) -> Tuple[int, ...]:
        return tuple((self.bits >> i) & 1 for i in range(self.n))

    @property
    def support(self) -> Tuple[int, ...]:
        return mask_to_subset(self.bits)

    def to_json(self) -> List[int]:
        return list(self.coordinates)


def all_points(n: int) -> List[Point]:
    return [Point(n, bits) for bits in range(1, 1 << n)]


@dataclass(frozen=True)
class OpenSet:
    """A set of points, stored as a bitset where bit p-1 marks the point with bits p."""

    n: int
    bits: int

    @classmethod
    def of_points(cls, n: int, points: Sequence[Point]) -> "OpenSet":
        bits = 0
        for point in points:
            bits |= 1 << (point.bits - 1)
        return cls(n, bits)

    @classmethod
    def empty(cls, n: int) -> "OpenSet":
        return cls(n, 0)

    @classmethod
    def whole(cls, n: int) -> "OpenSet":
        return cls(n, (1 << ((1 << n) - 1)) - 1)

    @property
    def points(self) -> Tuple[Point, ...]:
        return tuple(Point(self.n, p) for p in range(1, 1 << self.n) if self.bits >> (p - 1) & 1)

    @cached_property
    def antichain(self) -> Antichain:
        return antichain_from_open(self)

    def contains(self, point: Point) -> bool:
        return bool(self.bits >> (point.bits - 1) & 1)

    def union(self, other: "OpenSet") -> "OpenSet":
        return OpenSet(self.n, self.bits | other.bits)

    def intersection(self, other: "OpenSet") -> "OpenSet":
        return OpenSet(self.n, self.bits & other.bits)

    def issubset(self, other: "OpenSet") -> bool:
        return self.bits & other.bits == self.bits

    def is_empty(self) -> bool:
        return self.bits == 0

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def to_json(self) -> List[List[int]]:
        return [p.to_json() for p in self.points]


def subbasic(i: int, n: int) -> OpenSet:
    """A_i: points whose i-th coordinate is nonzero."""
    if not 1 <= i <= n:
        raise FormatError(f"subbasic index {i} out of range 1..{n}")
    return OpenSet.of_points(n, [p for p in all_points(n) if p.bits >> (i - 1) & 1])


def open_set_oracle(n: int) -> LatticeOracle[OpenSet]:
    return LatticeOracle(
        generators=tuple(subbasic(i, n) for i in range(1, n + 1)),
        meet=OpenSet.intersection,
        join=OpenSet.union,
        leq=OpenSet.issubset,
        bottom=OpenSet.empty(n),
        name=f"open-sets-{n}",
    )


def open_from_antichain(antichain: Antichain) -> OpenSet:
    return R_map(open_set_oracle(antichain.n), antichain)


def antichain_from_open(open_set: OpenSet) -> Antichain:
    return L_map(open_set_oracle(open_set.n), open_set)


def _meet_closure(generators: Iterable[T]) -> Set[T]:
    found: Set[T] = set(generators)
    frontier = set(found)
    while frontier:
        fresh = {a & b for a in frontier for b in found} - found
        found |= fresh
        frontier = fresh
    return found


def _join_closure(basics: Set[T]) -> Set[T]:
    # unions of a meet-closed family are closed under meets, so only unions remain
    found = set(basics)
    frontier = set(basics)
    while frontier:
        fresh = {a | b for a in frontier for b in basics} - found
        found |= fresh
        frontier = fresh
    return found


def basic_opens(n: int) -> List[OpenSet]:
    """Intersections of nonempty families of subbasic sets; one per nonempty index subset."""
    found = _meet_closure(subbasic(i, n).bits for i in range(1, n + 1))
    return [OpenSet(n, bits) for bits in sorted(found, key=lambda b: (bin(b).count("1"), b))]


def enumerate_topology(n: int, cap: int = 6) -> List[OpenSet]:
    """Close {A_i} and the empty set under union and intersection."""
    check_cap(n, cap)
    basics = {u.bits for u in basic_opens(n)}
    found = _join_closure(basics) | {0}
    result = [OpenSet(n, bits) for bits in sorted(found, key=lambda b: (bin(b).count("1"), b))]
    logger.debug("Closed subbasis to topology", extra={
        "component": "Topology",
        "data": {"N": n, "basic_opens": len(basics), "open_sets": len(result)},
    })
    return result


@dataclass(frozen=True)
class CoveredSet:
    """A finite set X with N covering subsets U_1..U_N."""

    elements: Tuple[Hashable, ...]
    covers: Tuple[FrozenSet[Hashable], ...]

    @classmethod
    def of(cls, elements: Sequence[Hashable], covers: Sequence[Sequence[Hashable]]) -> "CoveredSet":
        return cls(tuple(elements), tuple(frozenset(c) for c in covers))

    def __post_init__(self) -> None:
        universe = set(self.elements)
        for index, cover in enumerate(self.covers, start=1):
            if not cover <= universe:
                raise FormatError(f"cover U_{index} is not a subset of X")
        covered = set().union(*self.covers) if self.covers else set()
        missing = universe - covered
        if missing:
            raise CoveringError(f"elements outside every cover: {sorted(map(repr, missing))}")

    @property
    def n(self) -> int:
        return len(self.covers)

    def signature(self, element: Hashable) -> int:
        bits = 0
        for i, cover in enumerate(self.covers):
            if element in cover:
                bits |= 1 << i
        return bits


@dataclass(frozen=True)
class Embedding:
    """Classes of X under equal membership, their points, and the generic-position flag."""

    classes: Tuple[FrozenSet[Hashable], ...]
    points: Tuple[Point, ...]
    generic: bool

    def xi(self, class_index: int) -> Point:
        return self.points[class_index]

    def preimage(self, open_set: OpenSet) -> FrozenSet[int]:
        return frozenset(k for k, p in enumerate(self.points) if open_set.contains(p))


def is_generic(covered: CoveredSet) -> bool:
    """Every U_Λ minus the union of U_Γ is nonempty for nonempty Λ disjoint from Γ."""
    n = covered.n
    full = (1 << n) - 1
    for chosen in range(1, 1 << n):
        rest = full & ~chosen
        excluded = rest
        while True:
            if not any(covered.signature(x) & chosen == chosen and not covered.signature(x) & excluded
                       for x in covered.elements):
                return False
            if excluded == 0:
                break
            excluded = (excluded - 1) & rest
    return True


def quotient_and_embed(covered: CoveredSet) -> Embedding:
    groups: Dict[int, List[Hashable]] = {}
    for element in covered.elements:
        groups.setdefault(covered.signature(element), []).append(element)
    signatures = sorted(groups)
    return Embedding(
        classes=tuple(frozenset(groups[s]) for s in signatures),
        points=tuple(Point(covered.n, s) for s in signatures),
        generic=is_generic(covered),
    )


def quotient_topology(covered: CoveredSet, embedding: Embedding) -> FrozenSet[FrozenSet[int]]:
    """Open sets of X/~ as sets of class indices, generated by the images of the U_i."""
    images = [
        frozenset(k for k, cls in enumerate(embedding.classes) if cls <= cover)
        for cover in covered.covers
    ]
    return frozenset(_join_closure(_meet_closure(images)) | {frozenset()})


def is_open_detecting(covered: CoveredSet, cap: int = 6) -> bool:
    """The quotient topology is exactly the family of preimages of open sets."""
    embedding = quotient_and_embed(covered)
    preimages = frozenset(embedding.preimage(u) for u in enumerate_topology(covered.n, cap))
    return preimages == quotient_topology(covered, embedding)
