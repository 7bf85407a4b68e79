"""The passage between coverings of algebras and flabby sheaves, in both directions."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import List, Sequence, Union

from exceptions import DimensionMismatchError, NonDistributiveCoveringError, PreconditionError
from piecewise.algebras import AlgebraMorphism, CoveringData, covering_check, induced_quotient_map
from piecewise.sheaves.axioms import verify_flabby, verify_sheaf_axiom
from piecewise.sheaves.sheaf import SheafData, SheafMorphism
from piecewise.topology import OpenSet, subbasic

logger = logging.getLogger(__name__)


def from_covering(covering: CoveringData, cap: int = 6) -> SheafData:
    """U ↦ P/R(L(U)), with the induced quotient maps as restrictions."""
    not_onto = [i for i, ok in enumerate(covering.surjective, start=1) if not ok]
    if not_onto:
        raise PreconditionError(f"maps {not_onto} are not surjective")
    if not covering.weak:
        raise PreconditionError("the kernels do not intersect to zero")
    if not covering.distributive:
        raise NonDistributiveCoveringError("only distributive coverings define a sheaf")
    sheaf = SheafData.build(
        covering.n,
        lambda u: covering.quotient_at(u).algebra,
        lambda big, small: induced_quotient_map(covering.quotient_at(big), covering.quotient_at(small)),
        cap,
    )
    logger.debug("Built sheaf from covering", extra={
        "component": "Sheaf",
        "data": {"N": covering.n, "open_sets": len(sheaf.open_sets),
                 "section_dims": [sheaf.section(u).dim for u in sheaf.open_sets]},
    })
    return sheaf


def to_covering(sheaf: SheafData, cap: int = 6, verify: bool = True) -> CoveringData:
    """Global sections with the restrictions to the subbasic open sets."""
    if verify:
        flabby = verify_flabby(sheaf)
        if not flabby.flabby:
            raise PreconditionError(f"sheaf is not flabby: {flabby.witness_json()}")
        axiom = verify_sheaf_axiom(sheaf, "basis")
        if not axiom.holds:
            raise PreconditionError(f"sheaf axiom fails: {axiom.witness}")
    whole = sheaf.whole
    morphisms = [sheaf.restriction(whole, subbasic(i, sheaf.n)) for i in range(1, sheaf.n + 1)]
    return covering_check(sheaf.global_sections(), morphisms, cap)


@dataclass
class RoundtripVerdict:
    """Whether the composite of the two passages is canonically isomorphic to the identity."""

    holds: bool = True
    failures: List[str] = dc_field(default_factory=list)

    def fail(self, message: str) -> None:
        self.holds = False
        self.failures.append(message)


def roundtrip_covering(covering: CoveringData, cap: int = 6) -> RoundtripVerdict:
    """covering -> sheaf -> covering, compared through P ≅ P/0 and P_i ≅ P/ker π_i."""
    verdict = RoundtripVerdict()
    back = to_covering(from_covering(covering, cap), cap)
    whole = covering.quotient_at(OpenSet.whole(covering.n))
    iso = whole.projection
    if not iso.is_isomorphism():
        verdict.fail("P -> P/R(L(whole space)) is not an isomorphism")
    if not back.is_covering:
        verdict.fail("the recovered family is not a covering")
    for i, (original, recovered) in enumerate(zip(covering.morphisms, back.morphisms), start=1):
        piece = covering.quotient_at(subbasic(i, covering.n))
        comparison = AlgebraMorphism(piece.algebra, original.target, original.matrix @ piece.section)
        if not comparison.is_isomorphism():
            verdict.fail(f"P/ker π_{i} -> P_{i} is not an isomorphism")
        if comparison.matrix @ recovered.matrix @ iso.matrix != original.matrix:
            verdict.fail(f"recovered map {i} does not match π_{i} through the canonical isomorphisms")
    return verdict


def roundtrip_sheaf(sheaf: SheafData, cap: int = 6) -> RoundtripVerdict:
    """sheaf -> covering -> sheaf, compared through P(top)/R(L(U)) -> P(U)."""
    verdict = RoundtripVerdict()
    covering = to_covering(sheaf, cap)
    rebuilt = from_covering(covering, cap)
    whole = sheaf.whole
    comparisons = {}
    for open_set in sheaf.open_sets:
        quotient = covering.quotient_at(open_set)
        matrix = sheaf.restriction(whole, open_set).matrix @ quotient.section
        comparison = AlgebraMorphism(rebuilt.section(open_set), sheaf.section(open_set), matrix)
        comparisons[open_set] = comparison
        if not comparison.is_isomorphism():
            verdict.fail(f"P/R(L(U)) -> P(U) is not an isomorphism over {open_set.to_json()}")
    for big, small in sheaf.comparable_pairs():
        left = comparisons[small].matrix @ rebuilt.restriction(big, small).matrix
        right = sheaf.restriction(big, small).matrix @ comparisons[big].matrix
        if left != right:
            verdict.fail(f"comparison is not natural on {big.to_json()} -> {small.to_json()}")
    return verdict


def roundtrip_check(item: Union[CoveringData, SheafData], cap: int = 6) -> RoundtripVerdict:
    if isinstance(item, CoveringData):
        return roundtrip_covering(item, cap)
    if isinstance(item, SheafData):
        return roundtrip_sheaf(item, cap)
    raise TypeError(f"cannot round-trip {type(item).__name__}")


def morphism_from_covering_morphism(source: CoveringData, target: CoveringData, xi: AlgebraMorphism,
                                    pieces: Sequence[AlgebraMorphism], cap: int = 6) -> SheafMorphism:
    """p + R(L(U)) ↦ ξ(p) + R(L(U)) for a map of coverings (ξ, ξ_i) with η_i∘ξ = ξ_i∘π_i."""
    if source.n != target.n or len(pieces) != source.n:
        raise DimensionMismatchError("a map of coverings needs one piece map per covering map")
    for i, (pi, eta, piece) in enumerate(zip(source.morphisms, target.morphisms, pieces), start=1):
        if eta.matrix @ xi.matrix != piece.matrix @ pi.matrix:
            raise PreconditionError(f"square {i} of the covering map does not commute")
    source_sheaf = from_covering(source, cap)
    target_sheaf = from_covering(target, cap)
    components = {}
    for open_set in source_sheaf.open_sets:
        p_quotient = source.quotient_at(open_set)
        q_quotient = target.quotient_at(open_set)
        image = p_quotient.ideal.space.image_under(xi.matrix)
        if not q_quotient.ideal.space.contains_subspace(image):
            raise PreconditionError(f"ξ does not map R(L(U)) into R(L(U)) over {open_set.to_json()}")
        components[source_sheaf.key(open_set)] = AlgebraMorphism(
            p_quotient.algebra, q_quotient.algebra,
            q_quotient.projection.matrix @ xi.matrix @ p_quotient.section,
        )
    return SheafMorphism(source_sheaf, target_sheaf, components)
