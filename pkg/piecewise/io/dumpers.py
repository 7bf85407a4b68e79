"""Domain objects to document models."""

from __future__ import annotations

from typing import Optional, Sequence

from piecewise.algebras import Algebra, AlgebraMorphism
from piecewise.hopf import ComoduleAlgebra, ComoduleMorphism, HopfData, SmashProduct
from piecewise.io.models import (
    AlgebraModel,
    ComoduleCoveringDocument,
    ComoduleFibreProductDocument,
    ComoduleModel,
    ComoduleMorphismModel,
    CoveringDocument,
    DocumentKind,
    HopfModel,
    MorphismModel,
    Rows,
    SheafDocument,
    SmashModel,
)
from piecewise.linalg import LinearMap
from piecewise.sheaves import SheafData


def matrix_rows(linear_map: LinearMap) -> Rows:
    return linear_map.to_strings()


def algebra_model(algebra: Algebra) -> AlgebraModel:
    field = algebra.field
    return AlgebraModel(
        dim=algebra.dim,
        unit=[field.to_str(u) for u in algebra.unit],
        structure=[(i, j, k, field.to_str(c)) for i, j, k, c in algebra.structure_triples()],
        labels=[str(label) for label in algebra.labels] if algebra.labels is not None else None,
        name=algebra.name,
    )


def hopf_model(hopf: HopfData) -> HopfModel:
    return HopfModel(
        algebra=algebra_model(hopf.algebra),
        coproduct=matrix_rows(hopf.coproduct),
        counit=matrix_rows(hopf.counit),
        antipode=matrix_rows(hopf.antipode),
    )


def comodule_model(comodule: ComoduleAlgebra) -> ComoduleModel:
    return ComoduleModel(algebra=algebra_model(comodule.algebra), coaction=matrix_rows(comodule.coaction))


def smash_model(smash: SmashProduct) -> SmashModel:
    return SmashModel(base=algebra_model(smash.base), action=matrix_rows(smash.action.action))


def covering_document(algebra: Algebra, morphisms: Sequence[AlgebraMorphism], description: str = "") -> CoveringDocument:
    return CoveringDocument(
        kind=DocumentKind.COVERING,
        field=algebra.field.label,
        description=description,
        algebra=algebra_model(algebra),
        morphisms=[MorphismModel(target=algebra_model(m.target), matrix=matrix_rows(m.matrix)) for m in morphisms],
    )


def comodule_covering_document(comodule: ComoduleAlgebra, morphisms: Sequence[ComoduleMorphism],
                               description: str = "") -> ComoduleCoveringDocument:
    return ComoduleCoveringDocument(
        kind=DocumentKind.COMODULE_COVERING,
        field=comodule.field.label,
        description=description,
        hopf=hopf_model(comodule.hopf),
        comodule=comodule_model(comodule),
        morphisms=[
            ComoduleMorphismModel(target=comodule_model(m.target), matrix=matrix_rows(m.matrix)) for m in morphisms
        ],
    )


def fibre_product_document(pi12: ComoduleMorphism, pi21: ComoduleMorphism,
                           description: str = "") -> ComoduleFibreProductDocument:
    first = pi12.source
    return ComoduleFibreProductDocument(
        kind=DocumentKind.COMODULE_FIBRE_PRODUCT,
        field=first.field.label,
        description=description,
        hopf=hopf_model(first.hopf),
        first=comodule_model(first),
        second=comodule_model(pi21.source),
        overlap=comodule_model(pi12.target),
        pi12=matrix_rows(pi12.matrix),
        pi21=matrix_rows(pi21.matrix),
    )


def sheaf_document(sheaf: SheafData, description: Optional[str] = None) -> SheafDocument:
    sections = {key.key: algebra_model(algebra) for key, algebra in sheaf.sections.items()}
    restrictions = {
        f"{big.key}->{small.key}": matrix_rows(morphism.matrix)
        for (big, small), morphism in sheaf.restrictions.items()
    }
    return SheafDocument(
        kind=DocumentKind.SHEAF,
        field=sheaf.field.label,
        description=description or "",
        n=sheaf.n,
        sections=sections,
        restrictions=restrictions,
    )
