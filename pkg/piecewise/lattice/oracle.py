"""Lattice oracles, the presentation maps L and R, and the distributivity decision."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from enum import Enum
from typing import Callable, Dict, Generic, Optional, Tuple, TypeVar

from piecewise.lattice.antichain import (
    Antichain,
    minimal_masks,
    antichain_join,
    antichain_meet,
    enumerate_antichains,
    mask_to_subset,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")


@dataclass(frozen=True)
class LatticeOracle(Generic[T]):
    """A lattice generated by `generators`, known only through its operations."""

    generators: Tuple[T, ...]
    meet: Callable[[T, T], T]
    join: Callable[[T, T], T]
    leq: Callable[[T, T], bool]
    bottom: T
    name: str = "lattice"
    equal: Callable[[T, T], bool] = dc_field(default=lambda a, b: a == b)

    @property
    def n(self) -> int:
        return len(self.generators)

    def meet_of(self, mask: int) -> T:
        """λ_{i1} ∧ ... ∧ λ_{ik} for the nonempty index set encoded by `mask`."""
        indices = mask_to_subset(mask)
        result = self.generators[indices[0] - 1]
        for i in indices[1:]:
            result = self.meet(result, self.generators[i - 1])
        return result


def R_map(oracle: LatticeOracle[T], antichain: Antichain) -> T:
    """Join over members of the meets of their generators; bottom for the empty antichain."""
    if antichain.is_empty():
        return oracle.bottom
    masks = antichain.masks
    result = oracle.meet_of(masks[0])
    for mask in masks[1:]:
        result = oracle.join(result, oracle.meet_of(mask))
    return result


def L_map(oracle: LatticeOracle[T], element: T) -> Antichain:
    """min{u nonempty | meet of generators over u <= element}."""
    n = oracle.n
    below = [mask for mask in range(1, 1 << n) if oracle.leq(oracle.meet_of(mask), element)]
    return Antichain.from_masks(n, minimal_masks(below))


class Side(str, Enum):
    MEET = "meet"
    JOIN = "join"


@dataclass(frozen=True)
class DistributivityWitness:
    left: Antichain
    right: Antichain
    side: Side

    def to_json(self) -> Dict[str, object]:
        return {"l1": self.left.to_json(), "l2": self.right.to_json(), "side": self.side.value}


@dataclass(frozen=True)
class DistributivityVerdict:
    distributive: bool
    witness: Optional[DistributivityWitness]
    pairs_checked: int


def distributivity_check(oracle: LatticeOracle[T], cap: int = 6) -> DistributivityVerdict:
    """Decide whether the generated lattice is distributive.

    R must turn antichain meets and joins into lattice meets and joins for every pair;
    the first failing pair in enumeration order is the witness.
    """
    antichains = enumerate_antichains(oracle.n, cap)
    images: Dict[Antichain, T] = {a: R_map(oracle, a) for a in antichains}
    checked = 0
    for i, left in enumerate(antichains):
        for right in antichains[i:]:
            checked += 1
            if not oracle.equal(images[antichain_meet(left, right)], oracle.meet(images[left], images[right])):
                witness = DistributivityWitness(left, right, Side.MEET)
                break
            if not oracle.equal(images[antichain_join(left, right)], oracle.join(images[left], images[right])):
                witness = DistributivityWitness(left, right, Side.JOIN)
                break
        else:
            continue
        logger.debug("Distributivity witness found", extra={
            "component": "Lattice",
            "data": {"oracle": oracle.name, "witness": witness.to_json(), "pairs_checked": checked},
        })
        return DistributivityVerdict(False, witness, checked)
    logger.debug("Lattice is distributive", extra={
        "component": "Lattice",
        "data": {"oracle": oracle.name, "pairs_checked": checked},
    })
    return DistributivityVerdict(True, None, checked)


def order_consistent(oracle: LatticeOracle[T], a: T, b: T) -> bool:
    """a <= b exactly when a ∧ b = a."""
    return oracle.leq(a, b) == oracle.equal(oracle.meet(a, b), a)
