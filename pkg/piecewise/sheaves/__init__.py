"""Flabby sheaves of algebras and their equivalence with coverings."""

from piecewise.sheaves.axioms import (
    AXIOM_MODES,
    FlabbyVerdict,
    KernelLatticeVerdict,
    SheafAxiomVerdict,
    basic_open,
    basis_cover,
    irredundant_covers,
    kernel_lattice_check,
    verify_flabby,
    verify_sheaf_axiom,
)
from piecewise.sheaves.functors import (
    RoundtripVerdict,
    from_covering,
    morphism_from_covering_morphism,
    roundtrip_check,
    roundtrip_covering,
    roundtrip_sheaf,
    to_covering,
)
from piecewise.sheaves.sheaf import SheafData, SheafMorphism, function_sheaf

__all__ = [
    "AXIOM_MODES",
    "FlabbyVerdict",
    "KernelLatticeVerdict",
    "RoundtripVerdict",
    "SheafAxiomVerdict",
    "SheafData",
    "SheafMorphism",
    "basic_open",
    "basis_cover",
    "from_covering",
    "function_sheaf",
    "irredundant_covers",
    "kernel_lattice_check",
    "morphism_from_covering_morphism",
    "roundtrip_check",
    "roundtrip_covering",
    "roundtrip_sheaf",
    "to_covering",
    "verify_flabby",
    "verify_sheaf_axiom",
]
