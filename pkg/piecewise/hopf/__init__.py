"""Hopf algebras, comodule algebras and principality through strong connections."""

from piecewise.hopf.comodule import (
    CanonicalMap,
    Coinvariants,
    ComoduleAlgebra,
    ComoduleFibreProduct,
    ComoduleMorphism,
    QuotientComodule,
    canonical_map,
    coinvariant_map,
    coinvariant_surjectivity,
    coinvariants,
    comodule_fibre_product,
    comodule_ideal,
    function_comodule_algebra,
    function_comodule_covering,
    function_comodule_ideals,
    is_comodule_ideal,
    quotient_comodule_algebra,
    regular_comodule_algebra,
    restricted_morphism,
    trivial_comodule_algebra,
)
from piecewise.hopf.connection import (
    AXIOMS,
    CanonicalInverse,
    ConnectionVerdict,
    SolveResult,
    StrongConnection,
    TranslationMap,
    can_inverse_from_connection,
    connection_system,
    regular_connection,
    strong_connection_solve,
    strong_connection_verify,
    translation_map,
    verified_connection,
)
from piecewise.hopf.contraction import (
    Contraction,
    ContractionLatticeVerdict,
    ExtensionWitness,
    contraction_lattice_check,
    extended_right_ideal,
    ideal_contraction,
)
from piecewise.hopf.gluing import GluedConnection, glue_connection, overlap_map, transport_connection
from piecewise.hopf.groups import FiniteGroup, GSet
from piecewise.hopf.hopf_algebra import HopfData, function_hopf_algebra, group_algebra, trivial_hopf_algebra
from piecewise.hopf.principality import (
    PiecewiseReport,
    SheafPrincipality,
    Trivialization,
    glued_connection,
    piecewise_principal_check,
    sheaf_principality,
)
from piecewise.hopf.smash import (
    ModuleAlgebraAction,
    SmashProduct,
    TrivializationVerdict,
    cyclic_group_ring,
    root_of_unity_smash,
    smash_product,
    trivial_action,
    verify_trivialization,
)
from piecewise.hopf.splittings import (
    ALPHA_VARIANTS,
    ColinearSplitting,
    Splittings,
    alpha_splitting,
    colinear_splitting,
    quotient_connection,
    splittings,
    unital_functional,
)

__all__ = [
    "ALPHA_VARIANTS",
    "AXIOMS",
    "CanonicalInverse",
    "CanonicalMap",
    "Coinvariants",
    "ColinearSplitting",
    "ComoduleAlgebra",
    "ComoduleFibreProduct",
    "ComoduleMorphism",
    "ConnectionVerdict",
    "Contraction",
    "ContractionLatticeVerdict",
    "ExtensionWitness",
    "FiniteGroup",
    "GSet",
    "GluedConnection",
    "HopfData",
    "ModuleAlgebraAction",
    "PiecewiseReport",
    "QuotientComodule",
    "SheafPrincipality",
    "SmashProduct",
    "SolveResult",
    "Splittings",
    "StrongConnection",
    "TranslationMap",
    "Trivialization",
    "TrivializationVerdict",
    "alpha_splitting",
    "can_inverse_from_connection",
    "canonical_map",
    "coinvariant_map",
    "coinvariant_surjectivity",
    "coinvariants",
    "colinear_splitting",
    "comodule_fibre_product",
    "comodule_ideal",
    "connection_system",
    "contraction_lattice_check",
    "cyclic_group_ring",
    "extended_right_ideal",
    "function_comodule_algebra",
    "function_comodule_covering",
    "function_comodule_ideals",
    "function_hopf_algebra",
    "glue_connection",
    "glued_connection",
    "group_algebra",
    "ideal_contraction",
    "is_comodule_ideal",
    "overlap_map",
    "piecewise_principal_check",
    "quotient_comodule_algebra",
    "quotient_connection",
    "regular_comodule_algebra",
    "regular_connection",
    "restricted_morphism",
    "root_of_unity_smash",
    "sheaf_principality",
    "smash_product",
    "splittings",
    "strong_connection_solve",
    "strong_connection_verify",
    "transport_connection",
    "trivial_action",
    "trivial_comodule_algebra",
    "trivial_hopf_algebra",
    "unital_functional",
    "verified_connection",
    "verify_trivialization",
]
