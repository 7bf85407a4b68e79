"""The finite projective space over Z/2 with its coordinate topology."""

from piecewise.topology.space import (
    CoveredSet,
    Embedding,
    OpenSet,
    Point,
    all_points,
    antichain_from_open,
    basic_opens,
    enumerate_topology,
    is_generic,
    is_open_detecting,
    open_from_antichain,
    open_set_oracle,
    quotient_and_embed,
    quotient_topology,
    subbasic,
)

__all__ = [
    "CoveredSet",
    "Embedding",
    "OpenSet",
    "Point",
    "all_points",
    "antichain_from_open",
    "basic_opens",
    "enumerate_topology",
    "is_generic",
    "is_open_detecting",
    "open_from_antichain",
    "open_set_oracle",
    "quotient_and_embed",
    "quotient_topology",
    "subbasic",
]
