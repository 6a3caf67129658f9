"""
Oráculo de norma en R^dim.

Cada variante verifica por muestreo, al construirse, homogeneidad positiva,
desigualdad triangular y positividad.
"""
from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Any, Dict, Sequence

import numpy as np

from metriclab.domain.errors import DimensionMismatch, NormAxiomViolation
from metriclab.domain.numeric import TAU_EQ

AXIOM_SAMPLES = 32


class NormOracle(ABC):
    kind: str = ""

    def __init__(self, dim: int, check_seed: int = 0):
        if dim < 1:
            raise DimensionMismatch("dimension must be positive")
        self._dim = dim
        self._spot_check(check_seed)

    @property
    def dim(self) -> int:
        return self._dim

    @abstractmethod
    def evaluate(self, x: np.ndarray) -> float:
        raise NotImplementedError

    @abstractmethod
    def to_document(self) -> Dict[str, Any]:
        raise NotImplementedError

    def __call__(self, x: Sequence[float]) -> float:
        vec = np.asarray([float(v) for v in x], dtype=float)
        if vec.shape != (self._dim,):
            raise DimensionMismatch(f"vector of length {vec.size} for a norm on R^{self._dim}")
        return float(self.evaluate(vec))

    def _spot_check(self, seed: int) -> None:
        rng = np.random.default_rng(seed)
        xs = rng.standard_normal((AXIOM_SAMPLES, self._dim))
        ys = rng.standard_normal((AXIOM_SAMPLES, self._dim))
        ts = rng.uniform(-3.0, 3.0, AXIOM_SAMPLES)
        for x, y, t in zip(xs, ys, ts):
            nx, ny = self.evaluate(x), self.evaluate(y)
            if not nx > 0:
                raise NormAxiomViolation(f"{self.kind}: non-positive value on a non-zero vector")
            scaled = self.evaluate(t * x)
            if abs(scaled - abs(t) * nx) > TAU_EQ * max(1.0, abs(t) * nx):
                raise NormAxiomViolation(f"{self.kind}: homogeneity fails", {"t": float(t)})
            if self.evaluate(x + y) > nx + ny + TAU_EQ:
                raise NormAxiomViolation(f"{self.kind}: triangle inequality fails")
