"""
Documentos de normas en R^dim, discriminados por "kind".
"""
from __future__ import annotations
from typing import Annotated, List, Literal, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

UPPER_CONSTANT = 200 / 199
WINDOW_TOL = 1e-12


class EuclideanNormDocument(BaseModel):
    kind: Literal["euclidean"] = "euclidean"
    dim: int = Field(..., ge=1)


class CoefficientNorm(BaseModel):
    """‖x‖_f = max(‖x‖₂, max_{n≠m} (α + δ·f(n,m))·|x_n + x_m|/√2).

    Índices 0-based; los pares ausentes tienen f = 0.
    """

    kind: Literal["coeff_norm"] = "coeff_norm"
    dim: int = Field(..., ge=1)
    alpha: float = Field(1.004)
    delta: float = Field(UPPER_CONSTANT - 1.004)
    f: List[Tuple[int, int, float]] = Field(default_factory=list)

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"kind": "coeff_norm", "dim": 3, "alpha": 1.004, "delta": 0.001025,
                        "f": [[0, 1, 0.5], [0, 2, 1.0], [1, 2, 0.75]]}
        }
    )

    @model_validator(mode="after")
    def _check(self) -> "CoefficientNorm":
        if not 1 < self.alpha < self.alpha + self.delta <= UPPER_CONSTANT + WINDOW_TOL:
            raise ValueError("alpha and delta must satisfy 1 < alpha < alpha + delta <= 200/199")
        seen = set()
        for i, j, v in self.f:
            if i == j:
                raise ValueError(f"pair ({i},{j}) repeats an index")
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise ValueError(f"pair ({i},{j}) outside 0..{self.dim - 1}")
            if not 0 <= v <= 1:
                raise ValueError(f"f({i},{j}) = {v} outside [0, 1]")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"pair {key} listed twice")
            seen.add(key)
        return self

    @property
    def matrix(self) -> np.ndarray:
        """Matriz simétrica de coeficientes f, con ceros en la diagonal."""
        out = np.zeros((self.dim, self.dim))
        for i, j, v in self.f:
            out[i, j] = out[j, i] = v
        return out

    @property
    def h(self) -> np.ndarray:
        """h(n,m) = α + δ·f(n,m) fuera de la diagonal, 0 en ella."""
        out = self.alpha + self.delta * self.matrix
        np.fill_diagonal(out, 0.0)
        return out

    @classmethod
    def from_matrix(cls, f: np.ndarray, alpha: float, delta: float) -> "CoefficientNorm":
        dim = f.shape[0]
        entries = [(i, j, float(f[i, j])) for i in range(dim) for j in range(i + 1, dim)]
        return cls(dim=dim, alpha=alpha, delta=delta, f=entries)


class MaxOfFunctionalsDocument(BaseModel):
    kind: Literal["max_functionals"] = "max_functionals"
    dim: int = Field(..., ge=1)
    functionals: List[List[float]] = Field(default_factory=list)
    euclidean: bool = Field(True, description="Incluir ‖x‖₂ en el máximo")

    @model_validator(mode="after")
    def _check(self) -> "MaxOfFunctionalsDocument":
        if any(len(row) != self.dim for row in self.functionals):
            raise ValueError("every functional must have length dim")
        if not self.functionals and not self.euclidean:
            raise ValueError("an empty list of functionals needs the euclidean term")
        return self


NormDocument = Annotated[
    Union[EuclideanNormDocument, CoefficientNorm, MaxOfFunctionalsDocument],
    Field(discriminator="kind"),
]


class PermutationDistortion(BaseModel):
    max_pair_gap: float = Field(..., alias="maxPairGap")
    bm_upper_bound: float = Field(..., alias="bmUpperBound")
    pointwise_check: bool = Field(..., alias="pointwiseCheck")
    samples: int
    worst_slack: float = Field(..., alias="worstSlack", description="min(bound − gap) sobre las muestras")

    model_config = ConfigDict(populate_by_name=True)


class LemmsepEntry(BaseModel):
    first: Tuple[int, int]
    second: Tuple[int, int]
    overlap: int
    minus: float
    plus: float
    expected_minus: float = Field(..., alias="expectedMinus")
    expected_plus: float = Field(..., alias="expectedPlus")
    deviation: float

    model_config = ConfigDict(populate_by_name=True)


class SignedMembership(BaseModel):
    n: int
    m: int
    sign: int
    distance: Optional[float] = Field(None, description="‖sign·x/‖x‖ − e_{n,m}‖₂")
