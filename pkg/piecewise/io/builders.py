"""Named recipes that expand into explicit documents."""

from __future__ import annotations

from typing import Any, Callable, Dict, List, Optional, Sequence

from exceptions import FormatError
from piecewise.algebras import function_algebra, function_covering, restriction, square_zero_line_quotients
from piecewise.hopf import (
    ComoduleMorphism,
    FiniteGroup,
    GSet,
    function_comodule_algebra,
    function_comodule_covering,
    group_algebra,
    regular_comodule_algebra,
    root_of_unity_smash,
    smash_product,
    trivial_action,
    trivial_comodule_algebra,
)
from piecewise.io.dumpers import (
    comodule_covering_document,
    comodule_model,
    covering_document,
    fibre_product_document,
    hopf_model,
    matrix_rows,
    sheaf_document,
    smash_model,
)
from piecewise.io.models import (
    ComoduleDocument,
    DocumentKind,
    HopfDocument,
    SmashDocument,
    TrivializationModel,
)
from piecewise.linalg import FieldSpec, LinearMap
from piecewise.sheaves import function_sheaf
from piecewise.topology import CoveredSet

Builder = Callable[..., Dict[str, Any]]
BUILDERS: Dict[str, Builder] = {}


def builder(name: str) -> Callable[[Builder], Builder]:
    def register(func: Builder) -> Builder:
        BUILDERS[name] = func
        return func
    return register


def _dump(model) -> Dict[str, Any]:
    return model.model_dump(mode="json")


def _group(orders: Sequence[int]) -> FiniteGroup:
    return FiniteGroup(tuple(int(n) for n in orders))


@builder("function-covering")
def build_function_covering(points: Sequence, covers: Sequence[Sequence], field: str = "q",
                            description: str = "") -> Dict[str, Any]:
    algebra, morphisms = function_covering(FieldSpec.parse(field), points, covers)
    return _dump(covering_document(algebra, morphisms, description or f"Fun({len(points)} points), N={len(covers)}"))


@builder("square-zero-lines")
def build_square_zero_lines(field: str = "q", description: str = "") -> Dict[str, Any]:
    algebra, morphisms = square_zero_line_quotients(FieldSpec.parse(field))
    return _dump(covering_document(algebra, morphisms, description or "k+k^2 modulo three lines"))


@builder("function-sheaf")
def build_function_sheaf(elements: Sequence, covers: Sequence[Sequence], field: str = "q",
                         description: str = "") -> Dict[str, Any]:
    sheaf = function_sheaf(FieldSpec.parse(field), CoveredSet.of(elements, covers))
    return _dump(sheaf_document(sheaf, description or f"functions on {len(elements)} points"))


@builder("group-algebra")
def build_group_algebra(orders: Sequence[int], field: str = "q", description: str = "") -> Dict[str, Any]:
    spec = FieldSpec.parse(field)
    hopf = group_algebra(spec, _group(orders))
    return _dump(HopfDocument(kind=DocumentKind.HOPF, field=spec.label, description=description or hopf.name,
                              hopf=hopf_model(hopf)))


@builder("regular-comodule")
def build_regular_comodule(orders: Sequence[int], field: str = "q", description: str = "") -> Dict[str, Any]:
    spec = FieldSpec.parse(field)
    comodule = regular_comodule_algebra(group_algebra(spec, _group(orders)))
    return _dump(ComoduleDocument(kind=DocumentKind.COMODULE, field=spec.label,
                                  description=description or comodule.name,
                                  hopf=hopf_model(comodule.hopf), comodule=comodule_model(comodule)))


@builder("trivial-comodule")
def build_trivial_comodule(orders: Sequence[int], field: str = "q", description: str = "") -> Dict[str, Any]:
    spec = FieldSpec.parse(field)
    hopf = group_algebra(spec, _group(orders))
    comodule = trivial_comodule_algebra(function_algebra(spec, ["pt"]), hopf)
    return _dump(ComoduleDocument(kind=DocumentKind.COMODULE, field=spec.label,
                                  description=description or "k with the trivial coaction",
                                  hopf=hopf_model(hopf), comodule=comodule_model(comodule)))


@builder("function-comodule")
def build_function_comodule(orders: Sequence[int], free: int = 0, fixed: int = 0, field: str = "q",
                            description: str = "") -> Dict[str, Any]:
    spec = FieldSpec.parse(field)
    comodule = function_comodule_algebra(spec, GSet.from_orbits(_group(orders), free, fixed))
    return _dump(ComoduleDocument(kind=DocumentKind.COMODULE, field=spec.label,
                                  description=description or f"{comodule.name} with {free} free, {fixed} fixed orbits",
                                  hopf=hopf_model(comodule.hopf), comodule=comodule_model(comodule)))


def _free_trivialization(piece, group: FiniteGroup, spec: FieldSpec) -> Optional[TrivializationModel]:
    """Fun(m free orbits) ≅ Fun(m points) # k^G (trivial action); the identity matrix in orbit-major order."""
    order = group.order
    if piece.dim % order or any(not str(label).startswith("o") for label in piece.algebra.labels or ()):
        return None
    orbits = piece.dim // order
    smash = smash_product(trivial_action(function_algebra(spec, [f"b{o}" for o in range(orbits)]), piece.hopf))
    return TrivializationModel(smash=smash_model(smash), matrix=matrix_rows(LinearMap.identity(spec, piece.dim)))


@builder("function-comodule-covering")
def build_function_comodule_covering(orders: Sequence[int], pieces: Sequence[Sequence[int]], free: int = 0,
                                     fixed: int = 0, field: str = "q", trivializations: bool = False,
                                     description: str = "") -> Dict[str, Any]:
    """Restrictions of Fun(X) to unions of orbits, each piece listed by orbit indices."""
    spec = FieldSpec.parse(field)
    group = _group(orders)
    gset = GSet.from_orbits(group, free, fixed)
    subsets = [gset.orbit_union(piece) for piece in pieces]
    comodule, morphisms = function_comodule_covering(spec, gset, subsets)
    document = comodule_covering_document(comodule, morphisms, description or f"{comodule.name} over {len(pieces)} pieces")
    if trivializations:
        document.trivializations = [_free_trivialization(m.target, group, spec) for m in morphisms]
    return _dump(document)


@builder("three-orbit-fibre-product")
def build_three_orbit_fibre_product(orders: Sequence[int], field: str = "q", description: str = "") -> Dict[str, Any]:
    """Fun(O1∪O2) x_{Fun(O2)} Fun(O2∪O3) for three free orbits."""
    spec = FieldSpec.parse(field)
    gset = GSet.from_orbits(_group(orders), free=3)
    first = function_comodule_algebra(spec, gset.restrict(gset.orbit_union([0, 1])))
    second = function_comodule_algebra(spec, gset.restrict(gset.orbit_union([1, 2])))
    overlap = function_comodule_algebra(spec, gset.restrict(gset.orbit_union([1])))
    pi12 = ComoduleMorphism(first, overlap, restriction(first.algebra, overlap.algebra))
    pi21 = ComoduleMorphism(second, overlap, restriction(second.algebra, overlap.algebra))
    return _dump(fibre_product_document(pi12, pi21, description or "three free orbits glued along the middle one"))


@builder("root-of-unity-smash")
def build_root_of_unity_smash(n: int, field: str = "gf5", description: str = "") -> Dict[str, Any]:
    spec = FieldSpec.parse(field)
    smash = root_of_unity_smash(spec, int(n))
    return _dump(SmashDocument(kind=DocumentKind.SMASH, field=spec.label,
                               description=description or smash.comodule.name,
                               hopf=hopf_model(smash.comodule.hopf), smash=smash_model(smash)))


def expand_recipe(payload: Dict[str, Any]) -> Dict[str, Any]:
    name = payload.get("builder")
    func = BUILDERS.get(name)
    if func is None:
        raise FormatError(f"unknown builder {name!r}; known builders: {', '.join(sorted(BUILDERS))}")
    params = dict(payload.get("params") or {})
    if payload.get("description"):
        params.setdefault("description", payload["description"])
    try:
        return func(**params)
    except TypeError as exc:
        raise FormatError(f"bad parameters for builder {name!r}: {exc}") from exc


def builder_names() -> List[str]:
    return sorted(BUILDERS)
