"""Gluing strong connections over a fibre product of comodule algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict

from exceptions import DimensionMismatchError, GluingError, PreconditionError
from piecewise.hopf.comodule import ComoduleAlgebra, ComoduleFibreProduct, ComoduleMorphism, comodule_fibre_product
from piecewise.hopf.connection import ConnectionVerdict, StrongConnection, strong_connection_verify
from piecewise.hopf.splittings import colinear_splitting, unital_functional
from piecewise.linalg import LinearMap, block_injection, tensor, tensor_subspace

logger = logging.getLogger(__name__)


def _require_on(connection: StrongConnection, comodule: ComoduleAlgebra, label: str) -> None:
    connection.require_verified()
    if connection.map.shape != (comodule.dim * comodule.dim, comodule.hopf.dim):
        raise DimensionMismatchError(f"{label} does not live on {comodule!r}")


def overlap_map(source_leg: ComoduleMorphism, target_leg: ComoduleMorphism,
                target_connection: StrongConnection, variant: int = 0) -> LinearMap:
    """A unital colinear f: P1 -> P2 with π²₁∘f = π¹₂.

    Normally f = ς∘π¹₂ for the colinear splitting ς of π²₁. Over a zero overlap no
    unital splitting exists and f(x) = ω(x₍₀₎)·t(x₍₁₎) is used instead, with
    t(h) = ψ(ℓ₂(h)⟨1⟩) ℓ₂(h)⟨2⟩ and unital functionals ω on P1, ψ on P2.
    """
    p1, p2 = source_leg.source, target_leg.source
    if p2.dim == 0:
        return LinearMap.zero(p1.field, 0, p1.dim)
    if target_leg.target.dim > 0:
        splitting = colinear_splitting(target_leg, target_connection, variant)
        return splitting.map @ source_leg.matrix
    if p1.dim == 0:
        return LinearMap.zero(p1.field, p2.dim, 0)
    omega = tensor(unital_functional(p1), p1.hopf.identity_map()) @ p1.coaction
    t = tensor(unital_functional(p2), p2.identity_map()) @ target_connection.map
    return t @ omega


@dataclass(frozen=True, eq=False)
class GluedConnection:
    """ℓ = λ + T + T′ on P1 x_{P12} P2, with the pieces kept in P1 ⊕ P2 coordinates."""

    product: ComoduleFibreProduct
    connection: StrongConnection
    verdict: ConnectionVerdict
    first_approximation: LinearMap
    correction: LinearMap
    cross_term: LinearMap
    overlap_maps: Dict[str, LinearMap]

    @property
    def verified(self) -> bool:
        return self.verdict.verified


def glue_connection(pi12: ComoduleMorphism, pi21: ComoduleMorphism, connection1: StrongConnection,
                    connection2: StrongConnection, variant: int = 0) -> GluedConnection:
    """Glue verified connections on P1 and P2 along colinear surjections onto P12."""
    p1, p2 = pi12.source, pi21.source
    _require_on(connection1, p1, "ℓ1")
    _require_on(connection2, p2, "ℓ2")
    for label, leg in (("π¹₂", pi12), ("π²₁", pi21)):
        errors = leg.colinearity_errors()
        if errors:
            raise PreconditionError(f"{label} is not a colinear algebra map: {'; '.join(errors)}")
        if not leg.is_surjective():
            raise PreconditionError(f"{label} is not surjective")
    product = comodule_fibre_product(pi12, pi21)
    field = p1.field
    h = p1.hopf
    n1, n2 = p1.dim, p2.dim
    sizes = [n1, n2]
    i1, i2 = block_injection(field, sizes, 0), block_injection(field, sizes, 1)
    f12 = overlap_map(pi12, pi21, connection2, variant)
    f21 = overlap_map(pi21, pi12, connection1, variant)

    lift = i1 + i2 @ f12
    first = tensor(lift, lift) @ connection1.map
    defect = p2.algebra.unit_map() @ h.counit - p2.algebra.multiplication @ tensor(f12, f12) @ connection1.map
    correction = tensor(p2.algebra.multiplication, p2.identity_map()) @ tensor(defect, connection2.map) @ h.coproduct
    cross = tensor(p2.identity_map(), f21) @ correction
    total = first + tensor(i2, i2) @ correction + tensor(i2, i1) @ cross

    inside = tensor_subspace(product.product.space, product.product.space)
    if not all(inside.contains(column) for column in total.columns()):
        raise GluingError("λ + T + T′ leaves (P1 x P2) ⊗ (P1 x P2)")
    coordinates = product.product.coordinates()
    glued = tensor(coordinates, coordinates) @ total
    verdict = strong_connection_verify(product.comodule, glued)
    logger.debug("Glued strong connection", extra={
        "component": "Gluing",
        "data": {"dim_p1": n1, "dim_p2": n2, "dim_p12": pi12.target.dim, "dim_p": product.comodule.dim,
                 "variant": variant, "verified": verdict.verified, "failures": verdict.failures},
    })
    return GluedConnection(
        product=product,
        connection=StrongConnection(product.comodule, glued, verdict.verified),
        verdict=verdict,
        first_approximation=first,
        correction=correction,
        cross_term=cross,
        overlap_maps={"f12": f12, "f21": f21},
    )


def transport_connection(connection: StrongConnection, isomorphism: ComoduleMorphism) -> StrongConnection:
    """(φ ⊗ φ)∘ℓ along a colinear algebra isomorphism φ."""
    connection.require_verified()
    if not isomorphism.morphism.is_isomorphism():
        raise PreconditionError("transport needs an isomorphism")
    image = tensor(isomorphism.matrix, isomorphism.matrix) @ connection.map
    verdict = strong_connection_verify(isomorphism.target, image)
    return StrongConnection(isomorphism.target, image, verdict.verified)
