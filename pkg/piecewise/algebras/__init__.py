"""Finite-dimensional algebras, their ideals, quotients, pullbacks and coverings."""

from piecewise.algebras.algebra import (
    Algebra,
    AlgebraMorphism,
    Ideal,
    direct_sum_algebra,
    direct_sum_all,
    same_algebra,
    subalgebra,
    tensor_algebra,
)
from piecewise.algebras.covering import (
    CoveringData,
    GlueResult,
    Reconstruction,
    covering_check,
    crt_glue,
    ideal_oracle,
    pairwise_reconstruction,
    reconstruct,
    restrict_section,
)
from piecewise.algebras.functions import (
    function_algebra,
    function_covering,
    restriction,
    square_zero_algebra,
    square_zero_line_quotients,
    vanishing_ideal,
)
from piecewise.algebras.pullback import (
    FibreProduct,
    MultiPullback,
    SurjectivityCertificate,
    fibre_product,
    multi_pullback,
    surjectivity_criterion,
)
from piecewise.algebras.quotient import QuotientAlgebra, ideal_generated, induced_quotient_map, quotient_algebra

__all__ = [
    "Algebra",
    "AlgebraMorphism",
    "CoveringData",
    "FibreProduct",
    "GlueResult",
    "Ideal",
    "MultiPullback",
    "QuotientAlgebra",
    "Reconstruction",
    "SurjectivityCertificate",
    "covering_check",
    "crt_glue",
    "direct_sum_algebra",
    "direct_sum_all",
    "fibre_product",
    "function_algebra",
    "function_covering",
    "ideal_generated",
    "ideal_oracle",
    "induced_quotient_map",
    "multi_pullback",
    "pairwise_reconstruction",
    "quotient_algebra",
    "reconstruct",
    "restrict_section",
    "restriction",
    "same_algebra",
    "square_zero_algebra",
    "square_zero_line_quotients",
    "subalgebra",
    "surjectivity_criterion",
    "tensor_algebra",
    "vanishing_ideal",
]
