"""Deciding principality piece by piece, directly and through glued strong connections."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Tuple

from exceptions import PreconditionError
from piecewise.algebras import AlgebraMorphism, CoveringData, Ideal, covering_check
from piecewise.hopf.comodule import (
    ComoduleAlgebra,
    ComoduleMorphism,
    coinvariant_surjectivity,
    is_comodule_ideal,
    quotient_comodule_algebra,
    restricted_morphism,
)
from piecewise.hopf.connection import SolveResult, StrongConnection, strong_connection_solve
from piecewise.hopf.gluing import glue_connection, transport_connection
from piecewise.hopf.smash import SmashProduct, verify_trivialization
from piecewise.lattice import Antichain
from piecewise.linalg import (
    CombineMode,
    LinearMap,
    inverse,
    right_inverse,
    stack_rows,
    subspace_combine,
    subspace_intersection,
    tensor,
)
from piecewise.topology import enumerate_topology, subbasic

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Trivialization:
    """A claimed isomorphism from a piece onto a smash product."""

    smash: SmashProduct
    matrix: LinearMap


@dataclass
class PiecewiseReport:
    pieces: List[SolveResult]
    direct: SolveResult
    glued: Optional[StrongConnection] = None
    glued_failures: List[str] = dc_field(default_factory=list)
    coinvariant_surjective: List[bool] = dc_field(default_factory=list)
    covering: Optional[bool] = None
    coinvariant_covering: Optional[bool] = None
    trivializations: List[Optional[bool]] = dc_field(default_factory=list)

    @property
    def pieces_principal(self) -> bool:
        return all(result.feasible for result in self.pieces)

    @property
    def glued_principal(self) -> bool:
        return self.glued is not None and self.glued.verified

    @property
    def verdicts_agree(self) -> bool:
        return self.direct.feasible == self.glued_principal == self.pieces_principal

    @property
    def coverings_agree(self) -> Optional[bool]:
        if self.covering is None:
            return None
        return self.covering == self.coinvariant_covering

    @property
    def piecewise_trivial(self) -> Optional[bool]:
        if not self.trivializations or any(t is None for t in self.trivializations):
            return None
        return all(self.trivializations)


def _check_family(comodule: ComoduleAlgebra, morphisms: Sequence[ComoduleMorphism]) -> List[Ideal]:
    if not morphisms:
        raise PreconditionError("need at least one surjection")
    kernels = []
    for index, morphism in enumerate(morphisms, start=1):
        if morphism.source.dim != comodule.dim:
            raise PreconditionError(f"map {index} does not start at P")
        errors = morphism.colinearity_errors()
        if errors:
            raise PreconditionError(f"map {index} is not a colinear algebra map: {'; '.join(errors)}")
        if not morphism.is_surjective():
            raise PreconditionError(f"map {index} is not surjective")
        kernels.append(morphism.kernel())
    if not subspace_intersection([k.space for k in kernels], comodule.field, comodule.dim).is_zero():
        raise PreconditionError("the kernels do not intersect to zero")
    return kernels


def _piece_as_quotient(comodule: ComoduleAlgebra, morphism: ComoduleMorphism, kernel: Ideal):
    """P/ker π with the isomorphism P_i -> P/ker π induced by any right inverse of π."""
    quotient = quotient_comodule_algebra(comodule, Ideal(comodule.algebra, kernel.space))
    lift = right_inverse(morphism.matrix)
    matrix = quotient.projection.matrix @ lift
    iso = ComoduleMorphism(morphism.target, quotient.comodule,
                           AlgebraMorphism(morphism.target.algebra, quotient.comodule.algebra, matrix))
    return quotient, iso


def glued_connection(comodule: ComoduleAlgebra, morphisms: Sequence[ComoduleMorphism],
                     connections: Sequence[StrongConnection],
                     variant: int = 0) -> Tuple[Optional[StrongConnection], List[str]]:
    """Glue piece connections along P/J_1, P/(J_1∩J_2), ... and carry the result back to P."""
    kernels = _check_family(comodule, morphisms)
    failures: List[str] = []
    current, iso = _piece_as_quotient(comodule, morphisms[0], kernels[0])
    connection = transport_connection(connections[0], iso)
    accumulated = kernels[0].space
    for step, (morphism, kernel, piece_connection) in enumerate(
            zip(morphisms[1:], kernels[1:], connections[1:]), start=2):
        other, other_iso = _piece_as_quotient(comodule, morphism, kernel)
        other_connection = transport_connection(piece_connection, other_iso)
        overlap = quotient_comodule_algebra(
            comodule, Ideal(comodule.algebra, subspace_combine(accumulated, kernel.space, CombineMode.SUM))
        )
        target = overlap.comodule
        legs = []
        for piece in (current, other):
            matrix = overlap.projection.matrix @ piece.section
            legs.append(ComoduleMorphism(piece.comodule, target,
                                         AlgebraMorphism(piece.comodule.algebra, target.algebra, matrix)))
        glued = glue_connection(legs[0], legs[1], connection, other_connection, variant)
        if not glued.verified:
            failures.append(f"step {step}: glued connection fails {', '.join(glued.verdict.failures)}")
            return None, failures
        accumulated = subspace_combine(accumulated, kernel.space, CombineMode.INTERSECTION)
        merged = quotient_comodule_algebra(comodule, Ideal(comodule.algebra, accumulated))
        to_product = glued.product.product.coordinates() @ stack_rows(
            [current.projection.matrix, other.projection.matrix]
        ) @ merged.section
        back = inverse(to_product)
        if back is None:
            failures.append(f"step {step}: P/(J_1∩…∩J_{step}) is not the fibre product")
            return None, failures
        product_comodule = glued.product.comodule
        connection = transport_connection(glued.connection, ComoduleMorphism(
            product_comodule, merged.comodule,
            AlgebraMorphism(product_comodule.algebra, merged.comodule.algebra, back),
        ))
        if not connection.verified:
            failures.append(f"step {step}: transported connection fails verification")
            return None, failures
        current = merged
    # J_1 ∩ … ∩ J_N = 0, so the section of P -> P/0 is its inverse
    final = transport_connection(connection, ComoduleMorphism(
        current.comodule, comodule, AlgebraMorphism(current.comodule.algebra, comodule.algebra, current.section)
    ))
    if not final.verified:
        failures.append("glued connection does not verify on P")
        return None, failures
    return final, failures


def piecewise_principal_check(comodule: ComoduleAlgebra, morphisms: Sequence[ComoduleMorphism],
                              trivializations: Optional[Sequence[Optional[Trivialization]]] = None,
                              variant: int = 0, cap: int = 6) -> PiecewiseReport:
    """Principality of P against its pieces, by direct solve and by gluing."""
    _check_family(comodule, morphisms)
    pieces = [strong_connection_solve(m.target) for m in morphisms]
    direct = strong_connection_solve(comodule)
    report = PiecewiseReport(pieces=pieces, direct=direct)
    if report.pieces_principal:
        report.glued, report.glued_failures = glued_connection(
            comodule, morphisms, [result.connection for result in pieces], variant
        )
    else:
        report.glued_failures.append("a piece is not principal")
    if direct.feasible:
        report.coinvariant_surjective = [coinvariant_surjectivity(m) for m in morphisms]
        report.covering = covering_check(comodule.algebra, [m.morphism for m in morphisms], cap).is_covering
        restricted = [restricted_morphism(m) for m in morphisms]
        report.coinvariant_covering = covering_check(comodule.coinvariants.algebra, restricted, cap).is_covering
    if trivializations is not None:
        for morphism, claim in zip(morphisms, trivializations):
            report.trivializations.append(
                None if claim is None else verify_trivialization(morphism.target, claim.smash, claim.matrix).holds
            )
    logger.debug("Piecewise principality checked", extra={
        "component": "Principality",
        "data": {"N": len(morphisms), "pieces": [r.feasible for r in pieces], "direct": direct.feasible,
                 "glued": report.glued_principal, "agree": report.verdicts_agree},
    })
    return report


@dataclass
class SheafPrincipality:
    """Principality of every section P/R(L(U)) of the sheaf attached to a comodule covering."""

    covering: CoveringData
    sections: Dict[Antichain, ComoduleAlgebra] = dc_field(default_factory=dict)
    principal: Dict[Antichain, bool] = dc_field(default_factory=dict)
    colinear_restrictions: bool = True

    @property
    def all_principal(self) -> bool:
        return all(self.principal.values())

    def subbasic_principal(self) -> bool:
        n = self.covering.n
        return all(self.principal[subbasic(i, n).antichain] for i in range(1, n + 1))

    @property
    def propagates(self) -> bool:
        """Principal subbasic sections force every section to be principal."""
        return not self.subbasic_principal() or self.all_principal


def sheaf_principality(comodule: ComoduleAlgebra, morphisms: Sequence[ComoduleMorphism],
                       cap: int = 6) -> SheafPrincipality:
    _check_family(comodule, morphisms)
    covering = covering_check(comodule.algebra, [m.morphism for m in morphisms], cap)
    if not covering.is_covering:
        raise PreconditionError("the family is not a covering; the section functor is not a sheaf")
    result = SheafPrincipality(covering)
    opens = enumerate_topology(covering.n, cap)
    quotients = {}
    for open_set in opens:
        quotient = covering.quotient_at(open_set)
        if not is_comodule_ideal(comodule, quotient.ideal):
            raise PreconditionError(f"R(L(U)) for U = {open_set.antichain} is not a comodule ideal")
        h = comodule.hopf
        coaction = tensor(quotient.projection.matrix, h.identity_map()) @ comodule.coaction @ quotient.section
        section = ComoduleAlgebra(quotient.algebra, h, coaction, name=f"P/R{open_set.antichain.key}")
        key = open_set.antichain
        result.sections[key] = section
        result.principal[key] = strong_connection_solve(section).feasible
        quotients[key] = quotient
    for big in opens:
        for small in opens:
            if small == big or not small.issubset(big):
                continue
            matrix = quotients[small.antichain].projection.matrix @ quotients[big.antichain].section
            source, target = result.sections[big.antichain], result.sections[small.antichain]
            morphism = ComoduleMorphism(source, target, AlgebraMorphism(source.algebra, target.algebra, matrix))
            if morphism.colinearity_errors():
                result.colinear_restrictions = False
    logger.debug("Sheaf principality checked", extra={
        "component": "Principality",
        "data": {"N": covering.n, "open_sets": len(opens), "principal": sum(result.principal.values())},
    })
    return result
