"""
Esquemas de certificados de distancia.

Un certificado lleva el valor calculado, el testigo que lo realiza y la
bandera `exact` (búsqueda completa dentro del presupuesto).
"""
from __future__ import annotations
from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

from metriclab.domain.correspondence import Correspondence
from metriclab.domain.numeric import Number


class CorrespondenceWitness(BaseModel):
    kind: Literal["correspondence"] = "correspondence"
    n_a: int = Field(..., alias="nA")
    n_b: int = Field(..., alias="nB")
    pairs: List[Tuple[int, int]]

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def of(cls, R: Correspondence) -> "CorrespondenceWitness":
        return cls(n_a=R.n_a, n_b=R.n_b, pairs=R.pairs())

    def to_correspondence(self) -> Correspondence:
        return Correspondence.from_pairs(self.n_a, self.n_b, self.pairs)


class BijectionWitness(BaseModel):
    kind: Literal["bijection"] = "bijection"
    perm: List[int] = Field(..., description="perm[i] = imagen del punto i")

    def to_correspondence(self) -> Correspondence:
        return Correspondence.from_permutation(self.perm)


Witness = Union[CorrespondenceWitness, BijectionWitness]


class DistanceCertificate(BaseModel):
    """Valor + testigo + bandera de exactitud."""

    distance: str = Field(..., description="gh | gh-bij | lip | hausdorff | hl")
    value: Number
    exact: bool = True
    witness: Optional[Witness] = Field(None, discriminator="kind")
    nodes: int = Field(0, description="Nodos explorados por la búsqueda")
    details: Dict[str, Any] = Field(default_factory=dict)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "distance": "gh",
                "value": "1",
                "exact": True,
                "witness": {"kind": "correspondence", "nA": 2, "nB": 2, "pairs": [[0, 0], [1, 1]]},
                "nodes": 7,
            }
        }
    )


class HLClosenessResult(BaseModel):
    """Resultado de hl_close: testigo opcional y régimen de búsqueda."""

    eps: Number
    witness: Optional[CorrespondenceWitness] = None
    complete: bool = Field(..., description="True si la búsqueda fue exhaustiva")
    regime: Literal["exhaustive", "budgeted"] = "exhaustive"
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.witness is not None


class BoundCheck(BaseModel):
    name: str
    observed: Number
    bound: Number
    holds: bool


class HLUpperBound(BaseModel):
    """Cota φ₂(ε) junto con cada desigualdad intermedia verificada."""

    eps: Number
    value: Number
    delta: Number
    net: List[int]
    image_net: List[int]
    selector: Dict[int, int]
    checks: List[BoundCheck]

    @property
    def all_hold(self) -> bool:
        return all(c.holds for c in self.checks)
