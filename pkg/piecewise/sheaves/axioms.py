"""Flabbiness, the gluing axiom and the kernel lattice identities of a sheaf of algebras."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Tuple

from exceptions import CapExceededError, FormatError
from piecewise.linalg import LinearMap, Subspace, block_projection, stack_rows, subspace_combine, CombineMode
from piecewise.sheaves.sheaf import SheafData
from piecewise.topology import OpenSet, subbasic

logger = logging.getLogger(__name__)

AXIOM_MODES = ("basis", "all")


@dataclass(frozen=True)
class FlabbyVerdict:
    flabby: bool
    witness: Optional[Tuple[OpenSet, OpenSet]]

    def witness_json(self) -> Optional[Dict[str, object]]:
        if self.witness is None:
            return None
        big, small = self.witness
        return {"from": big.to_json(), "to": small.to_json()}


def verify_flabby(sheaf: SheafData) -> FlabbyVerdict:
    """Every restriction map must be onto."""
    for big, small in sheaf.comparable_pairs():
        if not sheaf.restriction(big, small).is_surjective():
            return FlabbyVerdict(False, (big, small))
    return FlabbyVerdict(True, None)


@dataclass(frozen=True)
class SheafAxiomVerdict:
    holds: bool
    mode: str
    covers_checked: int
    witness: Optional[Dict[str, object]] = None


def basic_open(subset: Tuple[int, ...], n: int) -> OpenSet:
    """B_u, the intersection of the A_i for i in u."""
    result = subbasic(subset[0], n)
    for i in subset[1:]:
        result = result.intersection(subbasic(i, n))
    return result


def basis_cover(open_set: OpenSet) -> List[OpenSet]:
    return [basic_open(member, open_set.n) for member in open_set.antichain.members]


def irredundant_covers(open_set: OpenSet, candidates: List[OpenSet]) -> Iterator[List[OpenSet]]:
    """Families of nonempty open subsets with union `open_set` where each member owns a point."""
    inside = [c for c in candidates if c.bits and c.bits & ~open_set.bits == 0]

    def owns_point(chosen: List[OpenSet], index: int) -> bool:
        others = 0
        for k, c in enumerate(chosen):
            if k != index:
                others |= c.bits
        return bool(chosen[index].bits & ~others)

    def extend(chosen: List[OpenSet], union: int, start: int) -> Iterator[List[OpenSet]]:
        if union == open_set.bits:
            yield list(chosen)
            return
        for position in range(start, len(inside)):
            candidate = inside[position]
            if not candidate.bits & ~union:
                continue
            chosen.append(candidate)
            if all(owns_point(chosen, k) for k in range(len(chosen))):
                yield from extend(chosen, union | candidate.bits, position + 1)
            chosen.pop()

    if open_set.is_empty():
        yield []
        return
    yield from extend([], 0, 0)


def _gluing_failure(sheaf: SheafData, open_set: OpenSet, cover: List[OpenSet]) -> Optional[str]:
    """None when P(U) maps isomorphically onto the equalizer of the cover."""
    field = sheaf.field
    source_dim = sheaf.section(open_set).dim
    sizes = [sheaf.section(c).dim for c in cover]
    total = sum(sizes)
    if cover:
        restrict = stack_rows([sheaf.restriction(open_set, c).matrix for c in cover])
    else:
        restrict = LinearMap.zero(field, 0, source_dim)
    blocks = []
    for i in range(len(cover)):
        for j in range(i + 1, len(cover)):
            overlap = cover[i].intersection(cover[j])
            blocks.append(
                sheaf.restriction(cover[i], overlap).matrix @ block_projection(field, sizes, i)
                - sheaf.restriction(cover[j], overlap).matrix @ block_projection(field, sizes, j)
            )
    equalizer = stack_rows(blocks).kernel() if blocks else Subspace.full(field, total)
    if not restrict.is_injective():
        return "uniqueness"
    if restrict.image() != equalizer:
        return "existence"
    return None


def verify_sheaf_axiom(sheaf: SheafData, mode: str = "basis", max_n: int = 3) -> SheafAxiomVerdict:
    """Check that compatible families glue uniquely, on basis covers or on every irredundant cover."""
    if mode not in AXIOM_MODES:
        raise FormatError(f"unknown sheaf axiom mode {mode!r}; expected one of {AXIOM_MODES}")
    if mode == "all" and sheaf.n > max_n:
        raise CapExceededError(f"checking every cover is limited to N <= {max_n}, got N={sheaf.n}")
    checked = 0
    nonempty = [u for u in sheaf.open_sets if not u.is_empty()]
    for open_set in sheaf.open_sets:
        covers = [basis_cover(open_set)] if mode == "basis" else irredundant_covers(open_set, nonempty)
        for cover in covers:
            checked += 1
            failure = _gluing_failure(sheaf, open_set, cover)
            if failure is not None:
                witness = {"open": open_set.to_json(), "cover": [c.to_json() for c in cover], "failure": failure}
                logger.debug("Sheaf axiom fails", extra={
                    "component": "Sheaf", "data": {"mode": mode, "witness": witness, "covers_checked": checked},
                })
                return SheafAxiomVerdict(False, mode, checked, witness)
    logger.debug("Sheaf axiom holds", extra={
        "component": "Sheaf", "data": {"mode": mode, "N": sheaf.n, "covers_checked": checked},
    })
    return SheafAxiomVerdict(True, mode, checked)


@dataclass(frozen=True)
class KernelLatticeVerdict:
    holds: bool
    witness: Optional[Dict[str, object]] = None


def kernel_lattice_check(sheaf: SheafData) -> KernelLatticeVerdict:
    """ker π_{U∪V} = ker π_U ∩ ker π_V and ker π_{U∩V} = ker π_U + ker π_V, with π_U from global sections."""
    whole = sheaf.whole
    kernels = {u: sheaf.restriction(whole, u).matrix.kernel() for u in sheaf.open_sets}
    for i, u in enumerate(sheaf.open_sets):
        for v in sheaf.open_sets[i + 1:]:
            if kernels[u.union(v)] != subspace_combine(kernels[u], kernels[v], CombineMode.INTERSECTION):
                return KernelLatticeVerdict(False, {"U": u.to_json(), "V": v.to_json(), "side": "union"})
            if kernels[u.intersection(v)] != subspace_combine(kernels[u], kernels[v], CombineMode.SUM):
                return KernelLatticeVerdict(False, {"U": u.to_json(), "V": v.to_json(), "side": "intersection"})
    return KernelLatticeVerdict(True)
