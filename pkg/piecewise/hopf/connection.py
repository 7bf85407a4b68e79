"""Strong connections: verification, the linear feasibility solver, and the maps they induce."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from exceptions import DimensionMismatchError, UnverifiedConnectionError
from piecewise.hopf.comodule import CanonicalMap, ComoduleAlgebra, canonical_map, lifted_canonical_map
from piecewise.hopf.hopf_algebra import HopfData
from piecewise.linalg import AffineSystem, LinearMap, column_map, kron_vectors, tensor

logger = logging.getLogger(__name__)

UNITALITY = "unitality"
SPLITTING = "splitting"
RIGHT_COLINEARITY = "right-colinearity"
LEFT_COLINEARITY = "left-colinearity"
UNIT_RETRACTION = "multiplication-counit"
AXIOMS = (UNITALITY, SPLITTING, RIGHT_COLINEARITY, LEFT_COLINEARITY)


@dataclass(frozen=True, eq=False)
class StrongConnection:
    """ℓ: H -> P⊗P, column h holding ℓ(e_h)."""

    comodule: ComoduleAlgebra
    map: LinearMap
    verified: bool = False

    def require_verified(self) -> "StrongConnection":
        if not self.verified:
            raise UnverifiedConnectionError(f"connection on {self.comodule!r} has not been verified")
        return self


@dataclass
class ConnectionVerdict:
    failures: List[str] = dc_field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.failures

    @property
    def first_failure(self) -> Optional[str]:
        return self.failures[0] if self.failures else None


def unit_tensor_identity(comodule: ComoduleAlgebra) -> LinearMap:
    """h ↦ 1 ⊗ h."""
    return tensor(column_map(comodule.field, comodule.algebra.unit), comodule.hopf.identity_map())


def strong_connection_verify(comodule: ComoduleAlgebra, connection: LinearMap) -> ConnectionVerdict:
    """Check the four defining identities, then ℓ(h)⟨1⟩ℓ(h)⟨2⟩ = ε(h) as a cross-check."""
    p, h = comodule, comodule.hopf
    n = p.dim
    if connection.shape != (n * n, h.dim):
        raise DimensionMismatchError(f"connection has shape {connection.shape}, expected ({n * n}, {h.dim})")
    verdict = ConnectionVerdict()
    identity_p, identity_h = p.identity_map(), h.identity_map()
    if connection.apply(h.unit) != kron_vectors(p.algebra.unit, p.algebra.unit):
        verdict.failures.append(UNITALITY)
    if lifted_canonical_map(p) @ connection != unit_tensor_identity(p):
        verdict.failures.append(SPLITTING)
    if tensor(identity_p, p.coaction) @ connection != tensor(connection, identity_h) @ h.coproduct:
        verdict.failures.append(RIGHT_COLINEARITY)
    if tensor(p.left_coaction(), identity_p) @ connection != tensor(identity_h, connection) @ h.coproduct:
        verdict.failures.append(LEFT_COLINEARITY)
    if p.algebra.multiplication @ connection != p.algebra.unit_map() @ h.counit:
        verdict.failures.append(UNIT_RETRACTION)
    return verdict


def verified_connection(comodule: ComoduleAlgebra, connection: LinearMap) -> StrongConnection:
    verdict = strong_connection_verify(comodule, connection)
    if not verdict.verified:
        raise UnverifiedConnectionError(f"connection fails {', '.join(verdict.failures)}")
    return StrongConnection(comodule, connection, True)


@dataclass(frozen=True)
class SolveResult:
    """Outcome of the feasibility problem; `inconsistent_block` names the first failing block."""

    feasible: bool
    connection: Optional[StrongConnection]
    inconsistent_block: Optional[str]
    unknowns: int
    equations: int


def _coproduct_terms(h: HopfData) -> Tuple[Dict[Tuple[int, int], List], Dict[Tuple[int, int], List]]:
    """Δ(e_h) = Σ c e_g ⊗ e_k indexed by (k, h) -> [(g, c)] and by (g, h) -> [(k, c)]."""
    by_second: Dict[Tuple[int, int], List] = {}
    by_first: Dict[Tuple[int, int], List] = {}
    d = h.dim
    for row, values in h.coproduct.entries().items():
        g, k = divmod(row, d)
        for column, value in values.items():
            by_second.setdefault((k, column), []).append((g, value))
            by_first.setdefault((g, column), []).append((k, value))
    return by_second, by_first


def connection_system(comodule: ComoduleAlgebra) -> AffineSystem:
    """All four conditions as one affine system in the entries x[(a*n+b)*d + h] of ℓ."""
    p, h = comodule, comodule.hopf
    field = p.field
    n, d = p.dim, h.dim
    nn = n * n
    system = AffineSystem(field, nn * d)

    def unknown(i: int, column: int) -> int:
        return i * d + column

    def add_row(coefficients: Dict[int, object], value=None) -> None:
        if any(coefficients.values()) or (value is not None and value):
            system.add(coefficients, value)

    unit_p = kron_vectors(p.algebra.unit, p.algebra.unit)
    system.begin_block(UNITALITY)
    for i in range(nn):
        add_row({unknown(i, c): value for c, value in enumerate(h.unit) if value}, unit_p[i])

    system.begin_block(SPLITTING)
    can_rows = lifted_canonical_map(p).entries()
    for r in range(n * d):
        row = can_rows.get(r, {})
        a, h_row = divmod(r, d)
        for column in range(d):
            value = p.algebra.unit[a] if h_row == column else field.zero
            add_row({unknown(i, column): coefficient for i, coefficient in row.items()}, value)

    by_second, by_first = _coproduct_terms(h)

    system.begin_block(RIGHT_COLINEARITY)
    right_rows = tensor(p.identity_map(), p.coaction).entries()
    for i in range(nn):
        for k in range(d):
            row = right_rows.get(i * d + k, {})
            for column in range(d):
                coefficients: Dict[int, object] = {}
                for j, value in row.items():
                    key = unknown(j, column)
                    coefficients[key] = coefficients.get(key, field.zero) + value
                for g, value in by_second.get((k, column), []):
                    key = unknown(i, g)
                    coefficients[key] = coefficients.get(key, field.zero) - value
                add_row(coefficients)

    system.begin_block(LEFT_COLINEARITY)
    left_rows = tensor(p.left_coaction(), p.identity_map()).entries()
    for g in range(d):
        for i in range(nn):
            row = left_rows.get(g * nn + i, {})
            for column in range(d):
                coefficients = {}
                for j, value in row.items():
                    key = unknown(j, column)
                    coefficients[key] = coefficients.get(key, field.zero) + value
                for k, value in by_first.get((g, column), []):
                    key = unknown(i, k)
                    coefficients[key] = coefficients.get(key, field.zero) - value
                add_row(coefficients)
    return system


def connection_from_solution(comodule: ComoduleAlgebra, solution) -> LinearMap:
    n, d = comodule.dim, comodule.hopf.dim
    entries: Dict[int, Dict[int, object]] = {}
    for index, value in enumerate(solution):
        if value:
            i, column = divmod(index, d)
            entries.setdefault(i, {})[column] = value
    return LinearMap.from_entries(comodule.field, n * n, d, entries)


def strong_connection_solve(comodule: ComoduleAlgebra) -> SolveResult:
    """Decide principality by solving for a strong connection exactly."""
    system = connection_system(comodule)
    solution = system.solve()
    equations = len(system.rows)
    if solution is None:
        block = system.first_inconsistent_block()
        logger.debug("No strong connection", extra={
            "component": "Hopf",
            "data": {"comodule": comodule.name, "unknowns": system.unknowns, "equations": equations,
                     "inconsistent_block": block},
        })
        return SolveResult(False, None, block, system.unknowns, equations)
    connection = verified_connection(comodule, connection_from_solution(comodule, solution))
    logger.debug("Strong connection found", extra={
        "component": "Hopf",
        "data": {"comodule": comodule.name, "unknowns": system.unknowns, "equations": equations},
    })
    return SolveResult(True, connection, None, system.unknowns, equations)


def regular_connection(comodule: ComoduleAlgebra) -> LinearMap:
    """(S ⊗ id)∘Δ, a strong connection when P = H with Δ_P = Δ."""
    h = comodule.hopf
    return tensor(h.antipode, h.identity_map()) @ h.coproduct


def lifted_inverse(connection: StrongConnection) -> LinearMap:
    """p ⊗ h ↦ p ℓ(h)⟨1⟩ ⊗ ℓ(h)⟨2⟩ into P⊗P."""
    p = connection.comodule
    return tensor(p.algebra.multiplication, p.identity_map()) @ tensor(p.identity_map(), connection.map)


@dataclass(frozen=True, eq=False)
class CanonicalInverse:
    inverse: LinearMap
    canonical: CanonicalMap
    left_identity: bool
    right_identity: bool

    @property
    def two_sided(self) -> bool:
        return self.left_identity and self.right_identity


def can_inverse_from_connection(connection: StrongConnection,
                                canonical: Optional[CanonicalMap] = None) -> CanonicalInverse:
    """The inverse of can: P⊗_B P -> P⊗H built from ℓ, with both composites checked."""
    connection.require_verified()
    p = connection.comodule
    canonical = canonical or canonical_map(p)
    inverse = canonical.balanced.projection @ lifted_inverse(connection)
    n, d = p.dim, p.hopf.dim
    left = canonical.can @ inverse == LinearMap.identity(p.field, n * d)
    right = inverse @ canonical.can == LinearMap.identity(p.field, canonical.balanced.dim)
    return CanonicalInverse(inverse, canonical, left, right)


@dataclass(frozen=True, eq=False)
class TranslationMap:
    """τ(h) = can⁻¹(1 ⊗ h) in P⊗_B P."""

    map: LinearMap
    matches_connection: bool
    splits_canonical: bool


def translation_map(connection: StrongConnection, canonical: Optional[CanonicalMap] = None) -> TranslationMap:
    p = connection.comodule
    inverse = can_inverse_from_connection(connection, canonical)
    tau = inverse.inverse @ unit_tensor_identity(p)
    classes = inverse.canonical.balanced.projection @ connection.map
    return TranslationMap(tau, tau == classes, inverse.canonical.can @ tau == unit_tensor_identity(p))
