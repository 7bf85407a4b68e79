"""Antichain arithmetic and lattice presentations."""

from piecewise.lattice.antichain import (
    Antichain,
    antichain_join,
    antichain_meet,
    count_antichains,
    enumerate_antichains,
    mask_to_subset,
    min_antichain,
    subset_to_mask,
    upper_set,
)
from piecewise.lattice.oracle import (
    DistributivityVerdict,
    DistributivityWitness,
    L_map,
    LatticeOracle,
    R_map,
    Side,
    distributivity_check,
    order_consistent,
)

__all__ = [
    "Antichain",
    "DistributivityVerdict",
    "DistributivityWitness",
    "L_map",
    "LatticeOracle",
    "R_map",
    "Side",
    "antichain_join",
    "antichain_meet",
    "count_antichains",
    "distributivity_check",
    "enumerate_antichains",
    "mask_to_subset",
    "min_antichain",
    "order_consistent",
    "subset_to_mask",
    "upper_set",
]
