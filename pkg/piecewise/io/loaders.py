"""Reading documents from disk and turning them into domain objects."""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ValidationError

from exceptions import EmptyFileError, FormatError, MissingInputError
from piecewise.algebras import Algebra, AlgebraMorphism
from piecewise.hopf import (
    ComoduleAlgebra,
    ComoduleMorphism,
    HopfData,
    ModuleAlgebraAction,
    SmashProduct,
    Trivialization,
    smash_product,
)
from piecewise.io.builders import expand_recipe
from piecewise.io.models import (
    DOCUMENT_MODELS,
    AlgebraModel,
    ComoduleCoveringDocument,
    CrtGlueDocument,
    ComoduleFibreProductDocument,
    ComoduleModel,
    CoveringDocument,
    DocumentKind,
    HopfModel,
    RecipeDocument,
    Rows,
    SheafDocument,
    SmashModel,
)
from piecewise.lattice import Antichain
from piecewise.linalg import FieldSpec, LinearMap
from piecewise.sheaves import SheafData
from piecewise.topology import OpenSet, enumerate_topology, open_from_antichain

logger = logging.getLogger(__name__)

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


def load_payload(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a JSON object from `path`."""
    path = Path(path)
    if not path.exists():
        raise MissingInputError(f"Input file not found: {path}")
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        raise EmptyFileError(f"Input file is empty: {path}")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"Invalid JSON in {path}: {exc}") from exc
    if not isinstance(payload, dict):
        raise FormatError(f"Top-level JSON value in {path} must be an object")
    return payload


def _errors(exc: ValidationError) -> List[str]:
    return [f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()]


def validate_document(payload: Dict[str, Any]) -> List[str]:
    """Schema errors of an explicit document or recipe, empty when valid."""
    if "builder" in payload:
        try:
            RecipeDocument.model_validate(payload)
            payload = expand_recipe(payload)
        except ValidationError as exc:
            return _errors(exc)
        except FormatError as exc:
            return [str(exc)]
    kind = payload.get("kind")
    try:
        model_cls = DOCUMENT_MODELS[DocumentKind(kind)]
    except ValueError:
        return [f"kind: unknown document kind {kind!r}"]
    try:
        model_cls.model_validate(payload)
    except ValidationError as exc:
        return _errors(exc)
    return []


def parse_document(payload: Dict[str, Any], expected: Optional[Tuple[DocumentKind, ...]] = None) -> BaseModel:
    """Validate `payload` (expanding recipes) into its document model."""
    if "builder" in payload:
        payload = expand_recipe(payload)
    errors = validate_document(payload)
    if errors:
        raise FormatError("; ".join(errors))
    kind = DocumentKind(payload["kind"])
    if expected is not None and kind not in expected:
        names = ", ".join(k.value for k in expected)
        raise FormatError(f"expected a document of kind {names}, got {kind.value}")
    return DOCUMENT_MODELS[kind].model_validate(payload)


def load_document(path: Union[str, Path], expected: Optional[Tuple[DocumentKind, ...]] = None) -> BaseModel:
    document = parse_document(load_payload(path), expected)
    logger.debug("Loaded document", extra={
        "component": "IO",
        "data": {"path": str(path), "kind": document.kind.value},
    })
    return document


# building domain objects ---------------------------------------------------------


def field_of(document) -> FieldSpec:
    return FieldSpec.parse(document.field)


def rows_map(field: FieldSpec, rows: Rows, target_dim: int, source_dim: int) -> LinearMap:
    if len(rows) != target_dim:
        raise FormatError(f"matrix has {len(rows)} rows, expected {target_dim}")
    return LinearMap.from_rows(field, rows, source_dim)


def build_algebra(field: FieldSpec, model: AlgebraModel, validate: bool = True) -> Algebra:
    algebra = Algebra.from_structure(field, model.dim, model.unit, model.structure, labels=model.labels, name=model.name)
    return algebra.validate() if validate else algebra


def build_covering(document: CoveringDocument) -> Tuple[Algebra, List[AlgebraMorphism]]:
    field = field_of(document)
    algebra = build_algebra(field, document.algebra)
    morphisms = []
    for entry in document.morphisms:
        target = build_algebra(field, entry.target)
        matrix = rows_map(field, entry.matrix, target.dim, algebra.dim)
        morphisms.append(AlgebraMorphism(algebra, target, matrix).validate())
    return algebra, morphisms


def build_sheaf(document: SheafDocument, cap: int = 6) -> SheafData:
    field = field_of(document)
    n = document.n
    open_sets = tuple(enumerate_topology(n, cap))
    by_key = {u.antichain.key: u.antichain for u in open_sets}

    def antichain(key: str) -> Antichain:
        try:
            parsed = Antichain.parse(n, json.loads(key))
        except (json.JSONDecodeError, TypeError) as exc:
            raise FormatError(f"bad antichain key {key!r}") from exc
        if parsed.key not in by_key:
            raise FormatError(f"antichain key {key!r} is not an open set for N={n}")
        return by_key[parsed.key]

    sections = {antichain(key): build_algebra(field, model) for key, model in document.sections.items()}
    missing = [key for key, a in by_key.items() if a not in sections]
    if missing:
        raise FormatError(f"missing sections over {', '.join(missing)}")
    restrictions = {}
    for pair, rows in document.restrictions.items():
        big_key, sep, small_key = pair.partition("->")
        if not sep:
            raise FormatError(f"restriction key {pair!r} must look like 'big->small'")
        big, small = antichain(big_key.strip()), antichain(small_key.strip())
        source, target = sections[big], sections[small]
        restrictions[(big, small)] = AlgebraMorphism(source, target, rows_map(field, rows, target.dim, source.dim))
    return SheafData(n, open_sets, sections, restrictions)


def build_hopf(field: FieldSpec, model: HopfModel, validate: bool = True) -> HopfData:
    algebra = build_algebra(field, model.algebra, validate)
    d = algebra.dim
    hopf = HopfData(
        algebra,
        rows_map(field, model.coproduct, d * d, d),
        rows_map(field, model.counit, 1, d),
        rows_map(field, model.antipode, d, d),
    )
    return hopf.validate() if validate else hopf


def build_comodule(field: FieldSpec, hopf: HopfData, model: ComoduleModel, validate: bool = True) -> ComoduleAlgebra:
    algebra = build_algebra(field, model.algebra, validate)
    coaction = rows_map(field, model.coaction, algebra.dim * hopf.dim, algebra.dim)
    comodule = ComoduleAlgebra(algebra, hopf, coaction, name=algebra.name)
    return comodule.validate() if validate else comodule


def build_smash(field: FieldSpec, hopf: HopfData, model: SmashModel) -> SmashProduct:
    base = build_algebra(field, model.base)
    action = rows_map(field, model.action, base.dim, hopf.dim * base.dim)
    return smash_product(ModuleAlgebraAction(base, hopf, action))


def build_comodule_covering(document: ComoduleCoveringDocument):
    """(P, [π_i], trivializations or None)."""
    field = field_of(document)
    hopf = build_hopf(field, document.hopf)
    comodule = build_comodule(field, hopf, document.comodule)
    morphisms = []
    for entry in document.morphisms:
        target = build_comodule(field, hopf, entry.target)
        matrix = rows_map(field, entry.matrix, target.dim, comodule.dim)
        morphisms.append(ComoduleMorphism(comodule, target, AlgebraMorphism(comodule.algebra, target.algebra, matrix)))
    trivializations = None
    if document.trivializations is not None:
        trivializations = []
        for entry, morphism in zip(document.trivializations, morphisms):
            if entry is None:
                trivializations.append(None)
                continue
            smash = build_smash(field, hopf, entry.smash)
            matrix = rows_map(field, entry.matrix, smash.comodule.dim, morphism.target.dim)
            trivializations.append(Trivialization(smash, matrix))
    return comodule, morphisms, trivializations


def build_fibre_product_legs(document: ComoduleFibreProductDocument) -> Tuple[ComoduleMorphism, ComoduleMorphism]:
    field = field_of(document)
    hopf = build_hopf(field, document.hopf)
    first = build_comodule(field, hopf, document.first)
    second = build_comodule(field, hopf, document.second)
    overlap = build_comodule(field, hopf, document.overlap)
    legs = []
    for source, rows in ((first, document.pi12), (second, document.pi21)):
        matrix = rows_map(field, rows, overlap.dim, source.dim)
        legs.append(ComoduleMorphism(source, overlap, AlgebraMorphism(source.algebra, overlap.algebra, matrix)))
    return legs[0], legs[1]


def build_crt_request(document: CrtGlueDocument) -> Tuple[Algebra, List[AlgebraMorphism], List[OpenSet], List[list]]:
    """Covering data, open sets and local elements; P-valued elements are kept as given."""
    algebra, morphisms = build_covering(document)
    n = len(morphisms)
    if len(document.opens) != len(document.elements):
        raise FormatError(f"{len(document.opens)} open sets but {len(document.elements)} local elements")
    opens = [open_from_antichain(Antichain.parse(n, members)) for members in document.opens]
    field = algebra.field
    elements = [[field.convert(value) for value in element] for element in document.elements]
    if document.in_parent:
        for index, element in enumerate(elements, start=1):
            if len(element) != algebra.dim:
                raise FormatError(f"element {index} has {len(element)} coordinates, P has dimension {algebra.dim}")
    return algebra, morphisms, opens, elements


def bundled_examples(directory: Union[str, Path, None] = None) -> List[Path]:
    """Every JSON input shipped under data/, sorted by name."""
    return sorted(Path(directory or DATA_DIR).glob("*.json"))


def with_field(payload: Dict[str, Any], label: Optional[str], default: str = "q") -> Dict[str, Any]:
    """Copy of `payload` over the field `label`, or over `default` when the payload names none."""
    payload = dict(payload)
    if "builder" in payload:
        params = dict(payload.get("params") or {})
        if label is not None:
            params["field"] = label
        else:
            params.setdefault("field", default)
        payload["params"] = params
    elif label is not None:
        payload["field"] = label
    else:
        payload.setdefault("field", default)
    return payload
