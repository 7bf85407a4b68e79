"""Splittings and retractions built from a strong connection, and connections on quotients."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional

from exceptions import DimensionMismatchError, PreconditionError
from piecewise.hopf.comodule import ComoduleAlgebra, ComoduleMorphism, coinvariant_map
from piecewise.hopf.connection import StrongConnection, lifted_inverse, strong_connection_verify
from piecewise.linalg import (
    LinearMap,
    Subspace,
    column_map,
    right_inverse,
    tensor,
    tensor_all,
    tensor_subspace,
)

ALPHA_VARIANTS = (0, 1)


def unital_functional(comodule: ComoduleAlgebra) -> LinearMap:
    """φ = e_k*/u_k at the first nonzero coordinate u_k of the unit, so φ(1) = 1."""
    field = comodule.field
    unit = comodule.algebra.unit
    k = next(i for i, value in enumerate(unit) if value)
    return LinearMap.from_entries(field, 1, comodule.dim, {0: {k: field.domain.quo(field.one, unit[k])}})


@dataclass(frozen=True, eq=False)
class Splittings:
    """s: P -> B⊗P, s′: P -> P⊗B and the retraction σ: P -> B (all valued in P-coordinates)."""

    connection: StrongConnection
    s: LinearMap
    s_prime: LinearMap
    sigma: LinearMap
    functional: LinearMap

    def checks(self) -> Dict[str, bool]:
        p = self.connection.comodule
        field = p.field
        n = p.dim
        identity = p.identity_map()
        m = p.algebra.multiplication
        coinv = p.coinvariants
        full = Subspace.full(field, n)
        left_b = tensor_subspace(coinv.space, full)
        right_b = tensor_subspace(full, coinv.space)
        left_coaction = p.left_coaction()
        h_identity = p.hopf.identity_map()
        basis = coinv.space.basis
        return {
            "s-splits-multiplication": m @ self.s == identity,
            "s-lands-in-B⊗P": all(left_b.contains(c) for c in self.s.columns()),
            "s-left-B-linear": all(
                self.s @ p.algebra.left_multiplication(b) == tensor(p.algebra.left_multiplication(b), identity) @ self.s
                for b in basis
            ),
            "s-right-colinear": tensor(identity, p.coaction) @ self.s == tensor(self.s, h_identity) @ p.coaction,
            "s′-splits-multiplication": m @ self.s_prime == identity,
            "s′-lands-in-P⊗B": all(right_b.contains(c) for c in self.s_prime.columns()),
            "s′-right-B-linear": all(
                self.s_prime @ p.algebra.right_multiplication(b)
                == tensor(identity, p.algebra.right_multiplication(b)) @ self.s_prime
                for b in basis
            ),
            "s′-left-colinear": tensor(h_identity, self.s_prime) @ left_coaction
            == tensor(left_coaction, identity) @ self.s_prime,
            "σ-retracts-B": self.sigma @ coinv.inclusion.matrix == coinv.inclusion.matrix,
            "σ-lands-in-B": all(coinv.space.contains(c) for c in self.sigma.columns()),
            "σ-left-B-linear": all(
                self.sigma @ p.algebra.left_multiplication(b) == p.algebra.left_multiplication(b) @ self.sigma
                for b in basis
            ),
            "σ-unital": self.sigma.apply(p.algebra.unit) == tuple(p.algebra.unit),
        }


def splittings(connection: StrongConnection, functional: Optional[LinearMap] = None) -> Splittings:
    connection.require_verified()
    p = connection.comodule
    if functional is None:
        functional = unital_functional(p)
    elif functional.shape != (1, p.dim) or functional.apply(p.algebra.unit) != (p.field.one,):
        raise PreconditionError("the functional must be a unital linear form on P")
    s = lifted_inverse(connection) @ p.coaction
    s_prime = tensor(p.identity_map(), p.algebra.multiplication) @ tensor(connection.map, p.identity_map()) @ \
        p.left_coaction()
    sigma = tensor(p.identity_map(), functional) @ s
    return Splittings(connection, s, s_prime, sigma, functional)


def alpha_splitting(morphism: ComoduleMorphism, variant: int = 0) -> LinearMap:
    """A unital linear splitting of π^coH, lifted to a map Q -> P that only matters on Q^coH.

    Variant 0 completes a right inverse so that 1 ↦ 1; variant 1 also shifts the
    remaining basis lifts by a kernel vector of π^coH when one exists.
    """
    if variant not in ALPHA_VARIANTS:
        raise PreconditionError(f"unknown splitting variant {variant}; expected one of {ALPHA_VARIANTS}")
    source = morphism.source.coinvariants
    target = morphism.target.coinvariants
    field = morphism.source.field
    if target.dim == 0:
        return LinearMap.zero(field, morphism.source.dim, morphism.target.dim)
    restricted = coinvariant_map(morphism)
    base = right_inverse(restricted)
    if base is None:
        raise PreconditionError("π^coH is not surjective")
    unit_p = source.space.coordinates(morphism.source.algebra.unit)
    unit_q = target.space.coordinates(morphism.target.algebra.unit)
    k0 = next(i for i, value in enumerate(unit_q) if value)
    phi = LinearMap.from_entries(field, 1, target.dim, {0: {k0: field.domain.quo(field.one, unit_q[k0])}})
    correction = tuple(a - b for a, b in zip(unit_p, base.apply(unit_q)))
    alpha = base + column_map(field, correction) @ phi
    if variant == 1 and target.dim >= 2:
        kernel = restricted.kernel()
        if not kernel.is_zero():
            j = next(i for i in range(target.dim) if i != k0)
            psi = LinearMap.from_entries(field, 1, target.dim, {0: {j: field.one}}) - phi.scale(unit_q[j])
            alpha = alpha + column_map(field, kernel.basis[0]) @ psi
    return source.space.inclusion() @ alpha @ target.space.coordinate_projection()


@dataclass(frozen=True, eq=False)
class ColinearSplitting:
    """ς: Q -> P with π∘ς = id, ς(1) = 1 and ς colinear."""

    morphism: ComoduleMorphism
    map: LinearMap

    def checks(self) -> Dict[str, bool]:
        p, q = self.morphism.source, self.morphism.target
        return {
            "splits-π": self.morphism.matrix @ self.map == q.identity_map(),
            "unital": self.map.apply(q.algebra.unit) == tuple(p.algebra.unit),
            "colinear": p.coaction @ self.map == tensor(self.map, p.hopf.identity_map()) @ q.coaction,
        }

    def verified(self) -> bool:
        return all(self.checks().values())


def colinear_splitting(morphism: ComoduleMorphism, connection: StrongConnection,
                       variant: int = 0) -> ColinearSplitting:
    """ς(q) = α(q₍₀₎π(ℓ(q₍₁₎)⟨1⟩)) ℓ(q₍₁₎)⟨2⟩ for a strong connection ℓ on the source."""
    connection.require_verified()
    p, q = morphism.source, morphism.target
    if connection.map.shape != (p.dim * p.dim, p.hopf.dim):
        raise DimensionMismatchError("the connection must live on the source of π")
    if q.dim == 0:
        return ColinearSplitting(morphism, LinearMap.zero(p.field, p.dim, 0))
    alpha = alpha_splitting(morphism, variant)
    pi = morphism.matrix
    chain = tensor(q.identity_map(), connection.map) @ q.coaction
    chain = tensor_all([q.identity_map(), pi, p.identity_map()]) @ chain
    chain = tensor(q.algebra.multiplication, p.identity_map()) @ chain
    chain = tensor(alpha, p.identity_map()) @ chain
    return ColinearSplitting(morphism, p.algebra.multiplication @ chain)


def quotient_connection(morphism: ComoduleMorphism, connection: StrongConnection) -> StrongConnection:
    """(π ⊗ π)∘ℓ on the target of a colinear surjection."""
    connection.require_verified()
    pi = morphism.matrix
    image = tensor(pi, pi) @ connection.map
    verdict = strong_connection_verify(morphism.target, image)
    return StrongConnection(morphism.target, image, verdict.verified)
