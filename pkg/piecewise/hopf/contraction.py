"""Contracting comodule ideals of a principal comodule algebra to ideals of its coinvariants."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence

from exceptions import NotAnIdealError
from piecewise.algebras import Algebra, Ideal, ideal_generated
from piecewise.hopf.comodule import is_comodule_ideal
from piecewise.hopf.connection import StrongConnection
from piecewise.hopf.smash import SmashProduct
from piecewise.hopf.splittings import Splittings, splittings
from piecewise.linalg import CombineMode, Subspace, subspace_combine, tensor_subspace

logger = logging.getLogger(__name__)


def _products(algebra: Algebra, left: Sequence[Sequence], right: Sequence[Sequence]) -> Subspace:
    return Subspace.span(algebra.field, algebra.dim, [algebra.multiply(x, y) for x in left for y in right])


@dataclass(frozen=True, eq=False)
class Contraction:
    """J ∩ B, both inside P and as an ideal of B, with the identities it satisfies."""

    ideal: Ideal
    space: Subspace
    base_ideal: Ideal
    checks: Dict[str, bool]

    @property
    def holds(self) -> bool:
        return all(self.checks.values())


def ideal_contraction(connection: StrongConnection, ideal: Ideal,
                      maps: Optional[Splittings] = None) -> Contraction:
    """Compute J ∩ B and check s(J) ⊆ (J∩B)⊗P, s′(J) ⊆ P⊗(J∩B) and P(J∩B) = J = (J∩B)P."""
    connection.require_verified()
    p = connection.comodule
    if not is_comodule_ideal(p, ideal):
        raise NotAnIdealError("contraction needs an ideal that is also a subcomodule")
    maps = maps or splittings(connection)
    coinv = p.coinvariants
    meet = subspace_combine(ideal.space, coinv.space, CombineMode.INTERSECTION)
    full = Subspace.full(p.field, p.dim)
    left_side = tensor_subspace(meet, full)
    right_side = tensor_subspace(full, meet)
    everything = [p.algebra.basis_vector(i) for i in range(p.dim)]
    checks = {
        "s(J) ⊆ (J∩B)⊗P": all(left_side.contains(maps.s.apply(v)) for v in ideal.space.basis),
        "s′(J) ⊆ P⊗(J∩B)": all(right_side.contains(maps.s_prime.apply(v)) for v in ideal.space.basis),
        "P(J∩B) = J": _products(p.algebra, everything, meet.basis) == ideal.space,
        "(J∩B)P = J": _products(p.algebra, meet.basis, everything) == ideal.space,
    }
    base_space = Subspace.span(p.field, coinv.dim, [coinv.space.coordinates(v) for v in meet.basis])
    return Contraction(ideal, meet, Ideal(coinv.algebra, base_space), checks)


@dataclass
class ContractionLatticeVerdict:
    """Whether J ↦ J ∩ B preserves sums, intersections and distinctness on a family."""

    failures: List[str] = dc_field(default_factory=list)
    contractions: List[Contraction] = dc_field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.failures


def contraction_lattice_check(connection: StrongConnection, ideals: Sequence[Ideal]) -> ContractionLatticeVerdict:
    verdict = ContractionLatticeVerdict()
    p = connection.comodule
    maps = splittings(connection)
    coinv = p.coinvariants.space
    verdict.contractions = [ideal_contraction(connection, ideal, maps) for ideal in ideals]
    for index, contraction in enumerate(verdict.contractions, start=1):
        failed = [name for name, ok in contraction.checks.items() if not ok]
        if failed:
            verdict.failures.append(f"ideal {index}: {', '.join(failed)}")

    def contract(space: Subspace) -> Subspace:
        return subspace_combine(space, coinv, CombineMode.INTERSECTION)

    for i, first in enumerate(verdict.contractions):
        for j in range(i + 1, len(verdict.contractions)):
            second = verdict.contractions[j]
            total = subspace_combine(first.ideal.space, second.ideal.space, CombineMode.SUM)
            meet = subspace_combine(first.ideal.space, second.ideal.space, CombineMode.INTERSECTION)
            if contract(total) != subspace_combine(first.space, second.space, CombineMode.SUM):
                verdict.failures.append(f"sum of ideals {i + 1} and {j + 1} is not preserved")
            if contract(meet) != subspace_combine(first.space, second.space, CombineMode.INTERSECTION):
                verdict.failures.append(f"intersection of ideals {i + 1} and {j + 1} is not preserved")
            if first.ideal.space != second.ideal.space and first.space == second.space:
                verdict.failures.append(f"ideals {i + 1} and {j + 1} have the same contraction")
    logger.debug("Contraction lattice checked", extra={
        "component": "Contraction",
        "data": {"ideals": len(ideals), "failures": len(verdict.failures)},
    })
    return verdict


@dataclass(frozen=True, eq=False)
class ExtensionWitness:
    """IP for an ideal I of B inside B # H; a right ideal that is not two-sided leaves I out of the image."""

    base_ideal: Ideal
    extension: Ideal
    right_closed: bool
    left_closed: bool

    @property
    def certifies_gap(self) -> bool:
        return self.right_closed and not self.left_closed


def extended_right_ideal(smash: SmashProduct, generators: Sequence[Sequence]) -> ExtensionWitness:
    """Extend the ideal of B generated by `generators` to IP inside the smash product."""
    base = smash.base
    base_ideal = ideal_generated(base, generators)
    p = smash.comodule.algebra
    inside = [smash.base_inclusion.apply(v) for v in base_ideal.space.basis]
    everything = [p.basis_vector(i) for i in range(p.dim)]
    extension = Ideal(p, _products(p, inside, everything))
    return ExtensionWitness(base_ideal, extension, extension.is_right_closed(), extension.is_left_closed())
