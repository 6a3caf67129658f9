"""
Parámetros de los gadgets de reducción.
"""
from __future__ import annotations
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from metriclab.domain.numeric import Number


class SeparationGadgetParams(BaseModel):
    p: Number = Field(Fraction(1), description="Separación añadida a toda distancia")
    copies: int = Field(2, ge=2, description="Copias de cada punto (truncamiento del factor N)")

    @field_validator("p")
    @classmethod
    def _positive(cls, v):
        if not v > 0:
            raise ValueError("p must be positive")
        return v


class BoundGadgetParams(BaseModel):
    """La reducción M_5 -> M^3 no tiene parámetros."""


class LevelGadgetParams(BaseModel):
    k_min: int = Field(-1, alias="kMin")
    k_max: int = Field(1, alias="kMax")

    model_config = ConfigDict(populate_by_name=True)

    @model_validator(mode="after")
    def _check_order(self) -> "LevelGadgetParams":
        if self.k_min > self.k_max:
            raise ValueError("kMin must not exceed kMax")
        return self

    @property
    def levels(self) -> List[int]:
        return list(range(self.k_min, self.k_max + 1))


class BmGadgetParams(BaseModel):
    vectors: List[List[Number]] = Field(..., min_length=1, description="Lista simétrica de vectores no nulos")
    c: Optional[List[Number]] = Field(None, description="c_7, c_8, ...; por defecto la rejilla geométrica")
    rationals: Optional[List[Number]] = Field(None, description="Racionales q codificados por los f-caminos")
    sums: Optional[List[Tuple[int, int]]] = Field(
        None, description="Pares (índices en `vectors`) que reciben triángulo x; por defecto todos los cerrados"
    )

    model_config = ConfigDict(
        json_schema_extra={"example": {"vectors": [["1/2", "0"], ["-1/2", "0"]]}}
    )

    @field_validator("vectors")
    @classmethod
    def _same_dim(cls, vectors: List[List[Fraction]]) -> List[List[Fraction]]:
        dims = {len(v) for v in vectors}
        if len(dims) != 1 or 0 in dims:
            raise ValueError("vectors must share a positive dimension")
        return vectors


class KadetsGadgetParams(BaseModel):
    sphere_points: List[List[float]] = Field(..., alias="spherePoints", min_length=1)
    families: List[List[int]] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)


class BackwardRelations(BaseModel):
    """Relaciones π ⊆ M×N y τ ⊆ N×M extraídas de un testigo entre gadgets acotados."""

    eps: float
    pi: List[Tuple[int, int]]
    tau: List[Tuple[int, int]]
    n: int

    @property
    def perm(self) -> Optional[List[int]]:
        """π como permutación si es biyección con π⁻¹ = τ."""
        images = {}
        for i, j in self.pi:
            images.setdefault(i, set()).add(j)
        if len(images) != self.n or any(len(v) != 1 for v in images.values()):
            return None
        perm = [next(iter(images[i])) for i in range(self.n)]
        if len(set(perm)) != self.n:
            return None
        inverse = sorted((j, i) for i, j in enumerate(perm))
        return perm if sorted(self.tau) == inverse else None
