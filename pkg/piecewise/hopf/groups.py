"""Finite abelian groups as products of cyclic groups, and right G-sets built from orbits."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Hashable, List, Sequence, Tuple

from exceptions import FormatError


@dataclass(frozen=True)
class FiniteGroup:
    """Z/n_1 x ... x Z/n_k; elements are indexed in mixed radix with the last factor fastest."""

    orders: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.orders or any(n < 1 for n in self.orders):
            raise FormatError(f"group orders must be positive, got {self.orders}")

    @classmethod
    def cyclic(cls, n: int) -> "FiniteGroup":
        return cls((n,))

    @classmethod
    def product(cls, *groups: "FiniteGroup") -> "FiniteGroup":
        return cls(tuple(n for g in groups for n in g.orders))

    @property
    def order(self) -> int:
        result = 1
        for n in self.orders:
            result *= n
        return result

    @property
    def identity(self) -> int:
        return 0

    @property
    def label(self) -> str:
        return "x".join(f"Z{n}" for n in self.orders)

    def element(self, index: int) -> Tuple[int, ...]:
        digits = []
        for n in reversed(self.orders):
            index, digit = divmod(index, n)
            digits.append(digit)
        return tuple(reversed(digits))

    def index(self, element: Sequence[int]) -> int:
        result = 0
        for digit, n in zip(element, self.orders):
            result = result * n + digit % n
        return result

    def multiply(self, a: int, b: int) -> int:
        return self.index([x + y for x, y in zip(self.element(a), self.element(b))])

    def inverse(self, a: int) -> int:
        return self.index([-x for x in self.element(a)])


@dataclass(frozen=True)
class GSet:
    """A finite set with a right action; `action[x][g]` is the index of x·g."""

    group: FiniteGroup
    points: Tuple[Hashable, ...]
    action: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        size = len(self.points)
        if len(self.action) != size:
            raise FormatError("action table needs one row per point")
        for x, row in enumerate(self.action):
            if len(row) != self.group.order or not all(0 <= y < size for y in row):
                raise FormatError(f"action row of point {self.points[x]!r} is malformed")
            if row[self.group.identity] != x:
                raise FormatError(f"identity does not fix point {self.points[x]!r}")
        for x in range(size):
            for g in range(self.group.order):
                for h in range(self.group.order):
                    if self.action[self.action[x][g]][h] != self.action[x][self.group.multiply(g, h)]:
                        raise FormatError("action table is not a right action")

    @classmethod
    def from_orbits(cls, group: FiniteGroup, free: int = 0, fixed: int = 0) -> "GSet":
        """`free` regular orbits (o, g) followed by `fixed` one-point orbits ("f", o)."""
        points: List[Hashable] = []
        action: List[Tuple[int, ...]] = []
        for o in range(free):
            base = len(points)
            for g in range(group.order):
                points.append(f"o{o}g{g}")
                action.append(tuple(base + group.multiply(g, h) for h in range(group.order)))
        for o in range(fixed):
            points.append(f"f{o}")
            action.append(tuple([len(points) - 1] * group.order))
        return cls(group, tuple(points), tuple(action))

    @property
    def size(self) -> int:
        return len(self.points)

    def orbits(self) -> List[Tuple[int, ...]]:
        seen: Dict[int, None] = {}
        result = []
        for x in range(self.size):
            if x in seen:
                continue
            orbit = tuple(sorted(set(self.action[x])))
            for y in orbit:
                seen[y] = None
            result.append(orbit)
        return result

    def is_free(self) -> bool:
        return all(len(set(row)) == self.group.order for row in self.action)

    def is_stable(self, subset: Sequence[int]) -> bool:
        members = set(subset)
        return all(y in members for x in members for y in self.action[x])

    def stable_subsets(self) -> List[Tuple[int, ...]]:
        """Every union of orbits, smallest first."""
        orbits = self.orbits()
        result = []
        for size in range(len(orbits) + 1):
            for chosen in combinations(orbits, size):
                result.append(tuple(sorted(x for orbit in chosen for x in orbit)))
        return result

    def restrict(self, subset: Sequence[int]) -> "GSet":
        """The sub-G-set on a stable subset, in the order of `subset`."""
        if not self.is_stable(subset):
            raise FormatError(f"subset {list(subset)} is not G-stable")
        position = {x: k for k, x in enumerate(subset)}
        return GSet(
            self.group,
            tuple(self.points[x] for x in subset),
            tuple(tuple(position[y] for y in self.action[x]) for x in subset),
        )

    def orbit_union(self, orbit_indices: Sequence[int]) -> Tuple[int, ...]:
        orbits = self.orbits()
        return tuple(sorted(x for o in orbit_indices for x in orbits[o]))
