"""Sheaves of algebras on the finite space of nonzero bit vectors."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Dict, List, Tuple

from exceptions import DimensionMismatchError, FormatError
from piecewise.algebras import Algebra, AlgebraMorphism, function_algebra, restriction, same_algebra
from piecewise.lattice import Antichain
from piecewise.linalg import FieldSpec
from piecewise.topology import CoveredSet, OpenSet, enumerate_topology, quotient_and_embed

logger = logging.getLogger(__name__)

PairKey = Tuple[Antichain, Antichain]


@dataclass(frozen=True, eq=False)
class SheafData:
    """Sections on every open set of Γ_N and restrictions for every strict inclusion.

    Sections are keyed by the canonical antichain of the open set; restrictions by
    (larger, smaller) antichain pairs.
    """

    n: int
    open_sets: Tuple[OpenSet, ...]
    sections: Dict[Antichain, Algebra]
    restrictions: Dict[PairKey, AlgebraMorphism]

    @classmethod
    def build(cls, n: int, section_of: Callable[[OpenSet], Algebra],
              restriction_of: Callable[[OpenSet, OpenSet], AlgebraMorphism], cap: int = 6) -> "SheafData":
        open_sets = tuple(enumerate_topology(n, cap))
        keys = {u: u.antichain for u in open_sets}
        sections = {keys[u]: section_of(u) for u in open_sets}
        restrictions = {
            (keys[big], keys[small]): restriction_of(big, small)
            for big in open_sets for small in open_sets
            if small != big and small.issubset(big)
        }
        return cls(n, open_sets, sections, restrictions)

    @property
    def field(self) -> FieldSpec:
        return self.global_sections().field

    @property
    def whole(self) -> OpenSet:
        return self.open_sets[-1]

    def key(self, open_set: OpenSet) -> Antichain:
        if open_set.n != self.n:
            raise DimensionMismatchError(f"open set for N={open_set.n} used on a sheaf with N={self.n}")
        return open_set.antichain

    def section(self, open_set: OpenSet) -> Algebra:
        try:
            return self.sections[self.key(open_set)]
        except KeyError:
            raise FormatError(f"no section stored over {open_set.to_json()}") from None

    def global_sections(self) -> Algebra:
        return self.section(self.whole)

    def restriction(self, big: OpenSet, small: OpenSet) -> AlgebraMorphism:
        if big == small:
            return AlgebraMorphism.identity(self.section(big))
        if not small.issubset(big):
            raise DimensionMismatchError("restriction target is not inside the source open set")
        try:
            return self.restrictions[(self.key(big), self.key(small))]
        except KeyError:
            raise FormatError(f"no restriction stored for {big.to_json()} -> {small.to_json()}") from None

    def comparable_pairs(self) -> List[Tuple[OpenSet, OpenSet]]:
        return [(big, small) for big in self.open_sets for small in self.open_sets
                if small != big and small.issubset(big)]

    def structure_errors(self) -> List[str]:
        """Shapes, the zero algebra over ∅, algebra axioms and functoriality of restrictions."""
        errors: List[str] = []
        for open_set in self.open_sets:
            algebra = self.section(open_set)
            errors.extend(f"section over {open_set.to_json()}: {e}" for e in algebra.axiom_errors())
        if self.section(self.open_sets[0]).dim != 0:
            errors.append("section over the empty set is not the zero algebra")
        for big, small in self.comparable_pairs():
            morphism = self.restriction(big, small)
            if not same_algebra(morphism.source, self.section(big)) or \
                    not same_algebra(morphism.target, self.section(small)):
                errors.append(f"restriction {big.to_json()} -> {small.to_json()} has the wrong ends")
                continue
            errors.extend(f"restriction {big.to_json()} -> {small.to_json()}: {e}" for e in morphism.axiom_errors())
        for big, middle in self.comparable_pairs():
            for small in self.open_sets:
                if small != middle and small.issubset(middle):
                    composite = self.restriction(middle, small).matrix @ self.restriction(big, middle).matrix
                    if composite != self.restriction(big, small).matrix:
                        errors.append(
                            f"restrictions {big.to_json()} -> {middle.to_json()} -> {small.to_json()} do not compose"
                        )
        return errors


@dataclass(frozen=True, eq=False)
class SheafMorphism:
    """One algebra map per open set, commuting with restrictions."""

    source: SheafData
    target: SheafData
    components: Dict[Antichain, AlgebraMorphism]

    def component(self, open_set: OpenSet) -> AlgebraMorphism:
        return self.components[self.source.key(open_set)]

    def naturality_errors(self) -> List[str]:
        errors: List[str] = []
        for big, small in self.source.comparable_pairs():
            left = self.target.restriction(big, small).matrix @ self.component(big).matrix
            right = self.component(small).matrix @ self.source.restriction(big, small).matrix
            if left != right:
                errors.append(f"square {big.to_json()} -> {small.to_json()} does not commute")
        for open_set in self.source.open_sets:
            errors.extend(f"component over {open_set.to_json()}: {e}" for e in self.component(open_set).axiom_errors())
        return errors

    def is_natural(self) -> bool:
        return not self.naturality_errors()


def function_sheaf(field: FieldSpec, covered: CoveredSet, cap: int = 6) -> SheafData:
    """U ↦ Fun(p⁻¹ξ⁻¹(U)) for a covered set X, its class map p and the signature embedding ξ."""
    embedding = quotient_and_embed(covered)
    class_of = {x: k for k, members in enumerate(embedding.classes) for x in members}
    cache: Dict[OpenSet, Algebra] = {}

    def section_of(open_set: OpenSet) -> Algebra:
        if open_set not in cache:
            classes = embedding.preimage(open_set)
            cache[open_set] = function_algebra(field, [x for x in covered.elements if class_of[x] in classes])
        return cache[open_set]

    sheaf = SheafData.build(
        covered.n, section_of, lambda big, small: restriction(section_of(big), section_of(small)), cap
    )
    logger.debug("Built function sheaf", extra={
        "component": "Sheaf",
        "data": {"N": covered.n, "points": len(covered.elements), "open_sets": len(sheaf.open_sets)},
    })
    return sheaf

