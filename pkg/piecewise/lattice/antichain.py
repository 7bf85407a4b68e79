"""Antichains of nonempty subsets of {1..N}: the free distributive lattice presentation."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Sequence, Tuple

from exceptions import CapExceededError, DimensionMismatchError, FormatError

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


def subset_to_mask(subset: Iterable[int]) -> int:
    mask = 0
    for i in subset:
        mask |= 1 << (i - 1)
    return mask


def mask_to_subset(mask: int) -> Subset:
    members = []
    i = 1
    while mask:
        if mask & 1:
            members.append(i)
        mask >>= 1
        i += 1
    return tuple(members)


def _canonical_members(subsets: Iterable[Iterable[int]]) -> Tuple[Subset, ...]:
    return tuple(sorted({tuple(sorted(set(s))) for s in subsets}))


@dataclass(frozen=True)
class Antichain:
    """Pairwise inclusion-incomparable nonempty subsets of {1..n}, canonically sorted."""

    n: int
    members: Tuple[Subset, ...]

    def __post_init__(self) -> None:
        if self.members != _canonical_members(self.members):
            raise FormatError(f"antichain members are not canonical: {self.members}")
        masks = self.masks
        for subset, mask in zip(self.members, masks):
            if not subset:
                raise FormatError("antichain members must be nonempty")
            if subset[0] < 1 or subset[-1] > self.n:
                raise FormatError(f"member {list(subset)} out of range 1..{self.n}")
            for other in masks:
                if other != mask and other & mask == other:
                    raise FormatError(f"members {list(subset)} and {list(mask_to_subset(other))} are comparable")

    @classmethod
    def of(cls, n: int, subsets: Iterable[Iterable[int]]) -> "Antichain":
        return cls(n, _canonical_members(subsets))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Antichain":
        return cls(n, tuple(sorted(mask_to_subset(m) for m in masks)))

    @classmethod
    def empty(cls, n: int) -> "Antichain":
        return cls(n, ())

    @classmethod
    def parse(cls, n: int, payload: Sequence[Sequence[int]]) -> "Antichain":
        return cls.of(n, payload)

    @property
    def masks(self) -> Tuple[int, ...]:
        return tuple(subset_to_mask(s) for s in self.members)

    def is_empty(self) -> bool:
        return not self.members

    def to_json(self) -> List[List[int]]:
        return [list(s) for s in self.members]

    @property
    def key(self) -> str:
        """Stable string key, e.g. "[[1],[2,3]]"."""
        return "[" + ",".join("[" + ",".join(str(i) for i in s) + "]" for s in self.members) + "]"

    def __str__(self) -> str:
        return self.key


def minimal_masks(masks: Iterable[int]) -> List[int]:
    unique = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    kept: List[int] = []
    for mask in unique:
        if not any(k & mask == k for k in kept):
            kept.append(mask)
    return kept


def min_antichain(n: int, subsets: Iterable[Iterable[int]]) -> Antichain:
    """Inclusion-minimal members of a family of nonempty subsets."""
    masks = []
    for subset in subsets:
        subset = tuple(subset)
        if not subset:
            raise FormatError("subsets must be nonempty")
        if min(subset) < 1 or max(subset) > n:
            raise FormatError(f"subset {list(subset)} out of range 1..{n}")
        masks.append(subset_to_mask(subset))
    return Antichain.from_masks(n, minimal_masks(masks))


def upper_set(antichain: Antichain) -> FrozenSet[Subset]:
    """All subsets of {1..n} containing some member."""
    masks = antichain.masks
    return frozenset(
        mask_to_subset(m) for m in range(1, 1 << antichain.n) if any(k & m == k for k in masks)
    )


def _require_same_n(a: Antichain, b: Antichain) -> None:
    if a.n != b.n:
        raise DimensionMismatchError(f"antichains over different N: {a.n} vs {b.n}")


def antichain_meet(a: Antichain, b: Antichain) -> Antichain:
    _require_same_n(a, b)
    return Antichain.from_masks(a.n, minimal_masks(x | y for x in a.masks for y in b.masks))


def antichain_join(a: Antichain, b: Antichain) -> Antichain:
    _require_same_n(a, b)
    return Antichain.from_masks(a.n, minimal_masks(a.masks + b.masks))


def check_cap(n: int, cap: int) -> None:
    if n < 1:
        raise FormatError(f"N must be at least 1, got {n}")
    if n > cap:
        raise CapExceededError(f"N={n} exceeds the configured enumeration cap {cap}")


@lru_cache(maxsize=None)
def _candidate_masks(n: int) -> Tuple[int, ...]:
    return tuple(sorted(range(1, 1 << n), key=lambda m: (bin(m).count("1"), mask_to_subset(m))))


def iter_antichain_masks(n: int) -> Iterator[Tuple[int, ...]]:
    """Yield every antichain as a tuple of masks, the empty one first."""
    def extend(chosen: Tuple[int, ...], candidates: Tuple[int, ...]) -> Iterator[Tuple[int, ...]]:
        yield chosen
        for index, mask in enumerate(candidates):
            rest = tuple(
                other for other in candidates[index + 1:]
                if other & mask != mask and other & mask != other
            )
            yield from extend(chosen + (mask,), rest)

    yield from extend((), _candidate_masks(n))


def enumerate_antichains(n: int, cap: int = 6) -> List[Antichain]:
    """All antichains of nonempty subsets of {1..n} in a deterministic order."""
    check_cap(n, cap)
    result = [Antichain.from_masks(n, masks) for masks in iter_antichain_masks(n)]
    logger.debug("Enumerated antichains", extra={
        "component": "Lattice",
        "data": {"N": n, "count": len(result)},
    })
    return result


def count_antichains(n: int, cap: int = 6) -> int:
    check_cap(n, cap)
    return sum(1 for _ in iter_antichain_masks(n))
