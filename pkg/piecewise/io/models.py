"""JSON document models for algebras, coverings, sheaves and comodule algebras."""

from __future__ import annotations

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, field_validator

Scalar = Union[int, str]
Rows = List[List[Scalar]]


class DocumentKind(str, Enum):
    """Supported input document kinds."""

    ALGEBRA = "algebra"
    COVERING = "covering"
    CRT_GLUE = "crt-glue"
    SHEAF = "sheaf"
    HOPF = "hopf"
    COMODULE = "comodule"
    COMODULE_COVERING = "comodule-covering"
    COMODULE_FIBRE_PRODUCT = "comodule-fibre-product"
    SMASH = "smash"


class AlgebraModel(BaseModel):
    """Structure constants: [i, j, k, c] means e_i e_j has coefficient c at e_k."""

    dim: int = Field(ge=0)
    unit: List[Scalar]
    structure: List[Tuple[int, int, int, Scalar]] = Field(default_factory=list)
    labels: Optional[List[str]] = None
    name: str = ""

    @field_validator("unit")
    @classmethod
    def _unit_length(cls, value, info):
        dim = info.data.get("dim")
        if dim is not None and len(value) != dim:
            raise ValueError(f"unit has {len(value)} entries for dimension {dim}")
        return value


class MorphismModel(BaseModel):
    """A map out of the document's algebra, as dense rows over the target basis."""

    target: AlgebraModel
    matrix: Rows


class DocumentBase(BaseModel):
    kind: DocumentKind
    field: str = "q"
    description: str = ""


class AlgebraDocument(DocumentBase):
    algebra: AlgebraModel


class CoveringDocument(DocumentBase):
    algebra: AlgebraModel
    morphisms: List[MorphismModel] = Field(min_length=1)


class CrtGlueDocument(CoveringDocument):
    """Local elements over open sets given by their antichains."""

    opens: List[List[List[int]]] = Field(min_length=1)
    elements: List[List[Scalar]] = Field(min_length=1)
    in_parent: bool = False  # elements are given in P and restricted to each open set


class SheafDocument(DocumentBase):
    """Sections keyed by antichain keys such as "[[1],[2,3]]"; restrictions by "big->small"."""

    n: int = Field(ge=1)
    sections: Dict[str, AlgebraModel]
    restrictions: Dict[str, Rows] = Field(default_factory=dict)


class HopfModel(BaseModel):
    algebra: AlgebraModel
    coproduct: Rows
    counit: Rows
    antipode: Rows


class HopfDocument(DocumentBase):
    hopf: HopfModel


class ComoduleModel(BaseModel):
    algebra: AlgebraModel
    coaction: Rows


class ComoduleDocument(DocumentBase):
    hopf: HopfModel
    comodule: ComoduleModel


class SmashModel(BaseModel):
    """A left H-action on B as a map H⊗B -> B (column h*dim B + b)."""

    base: AlgebraModel
    action: Rows


class SmashDocument(DocumentBase):
    hopf: HopfModel
    smash: SmashModel


class ComoduleMorphismModel(BaseModel):
    target: ComoduleModel
    matrix: Rows


class TrivializationModel(BaseModel):
    smash: SmashModel
    matrix: Rows


class ComoduleCoveringDocument(DocumentBase):
    hopf: HopfModel
    comodule: ComoduleModel
    morphisms: List[ComoduleMorphismModel] = Field(min_length=1)
    trivializations: Optional[List[Optional[TrivializationModel]]] = None


class ComoduleFibreProductDocument(DocumentBase):
    """P1 ->pi12 P12 <-pi21 P2."""

    hopf: HopfModel
    first: ComoduleModel
    second: ComoduleModel
    overlap: ComoduleModel
    pi12: Rows
    pi21: Rows


class RecipeDocument(BaseModel):
    """A bundled input expanded by a named builder."""

    builder: str
    params: Dict[str, Any] = Field(default_factory=dict)
    description: str = ""


DOCUMENT_MODELS = {
    DocumentKind.ALGEBRA: AlgebraDocument,
    DocumentKind.COVERING: CoveringDocument,
    DocumentKind.CRT_GLUE: CrtGlueDocument,
    DocumentKind.SHEAF: SheafDocument,
    DocumentKind.HOPF: HopfDocument,
    DocumentKind.COMODULE: ComoduleDocument,
    DocumentKind.COMODULE_COVERING: ComoduleCoveringDocument,
    DocumentKind.COMODULE_FIBRE_PRODUCT: ComoduleFibreProductDocument,
    DocumentKind.SMASH: SmashDocument,
}
