from __future__ import annotations
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from metriclab.domain.numeric import Number


class GameMove(BaseModel):
    """Una ronda: el jugador I elige `point` en `side`, el II responde en el otro espacio."""

    side: Literal["M", "N"]
    point: int
    response: int
    value: Number = Field(..., description="Valor de la posición antes de la ronda")


class GameValue(BaseModel):
    value: Number
    depth: int = Field(..., ge=0)
    stable: Optional[bool] = Field(None, description="El valor ya coincide con el de profundidad |M|+|N|")
    eps: Optional[Number] = None
    winner: Optional[Literal["I", "II"]] = None
    principal_variation: List[GameMove] = Field(default_factory=list, alias="principalVariation")

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={"example": {"value": "1", "depth": 4, "stable": True}},
    )


class DualityReport(BaseModel):
    stabilized_value: Number = Field(..., alias="stabilizedValue")
    stabilization_depth: int = Field(..., alias="stabilizationDepth")
    matches_gh: bool = Field(..., alias="matchesGH")
    gh_value: Number = Field(..., alias="ghValue")
    values: List[Number] = Field(..., description="Valor desde la posición vacía en profundidad 0..|M|+|N|")
    monotone: bool = True
    nodes: int = 0

    model_config = ConfigDict(populate_by_name=True)


class TransitivityCheck(BaseModel):
    composed: Number
    first: Number
    second: Number
    holds: bool
