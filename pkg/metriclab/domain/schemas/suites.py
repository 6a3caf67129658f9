"""
Informes de las suites de propiedades.

El orden de las claves es estable (orden de declaración de los campos) para
que dos ejecuciones con la misma semilla produzcan informes comparables.
"""
from __future__ import annotations
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field


class Observation(BaseModel):
    """Una comprobación observed ≤ bound realizada en un ensayo."""

    check: str
    observed: float
    bound: float
    margin: float
    holds: bool
    inputs: Dict[str, Any] = Field(default_factory=dict)


class Failure(BaseModel):
    trial: int
    check: str
    inputs: Dict[str, Any]
    observed: float
    bound: float
    margin: float


class SuiteReport(BaseModel):
    suite: str
    trials: int
    seed: int
    failures: List[Failure] = Field(default_factory=list)
    worst_margin: Optional[float] = Field(None, alias="worstMargin")
    checks: int = Field(0, description="Comprobaciones evaluadas")
    inconclusive: int = Field(0, description="Ensayos sin decidir (precondición o presupuesto)")
    elapsed: float = Field(0.0, description="Segundos")

    model_config = ConfigDict(populate_by_name=True)

    @property
    def passed(self) -> bool:
        return not self.failures


class SuiteInfo(BaseModel):
    name: str
    description: str
