"""
Generación sembrada de instancias aleatorias.

Las distancias se sortean en [lo, hi] y se reparan con el cierre por caminos
más cortos (graph_metric con cap = hi), así que la salida siempre es una
métrica y, como 2·lo ≥ lo, permanece en la clase M_lo^hi.
"""
from __future__ import annotations
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, Field, model_validator

from metriclab.domain.metric import ClassBounds, FiniteMetricSpace, WeightedGraph, graph_metric
from metriclab.domain.numeric import Number, NumericMode, to_mode


class RandomInstanceSpec(BaseModel):
    point_count: int = Field(..., ge=1, alias="pointCount")
    distance_range: Tuple[Number, Number] = Field((Fraction(1), Fraction(2)), alias="distanceRange")
    class_bounds: Optional[ClassBounds] = Field(None, alias="classBounds")
    seed: int = Field(0, ge=0)
    resolution: int = Field(8, ge=1, description="Denominador de la grilla racional")

    model_config = {"populate_by_name": True}

    @model_validator(mode="after")
    def _check_range(self) -> "RandomInstanceSpec":
        lo, hi = self.distance_range
        if not 0 < lo <= hi:
            raise ValueError("distance range must satisfy 0 < lo <= hi")
        return self


def _draw(rng: np.random.Generator, lo, hi, mode: NumericMode, resolution: int):
    if mode is NumericMode.FLOAT:
        return float(rng.uniform(float(lo), float(hi)))
    lo_q, hi_q = Fraction(lo), Fraction(hi)
    steps = int((hi_q - lo_q) * resolution)
    return lo_q + Fraction(int(rng.integers(0, steps + 1)), resolution)


def random_metric(
    spec: RandomInstanceSpec,
    mode: NumericMode = NumericMode.RATIONAL,
    rng: Optional[np.random.Generator] = None,
) -> FiniteMetricSpace:
    rng = rng if rng is not None else np.random.default_rng(spec.seed)
    lo, hi = spec.distance_range
    if spec.class_bounds is not None:
        if spec.class_bounds.p is not None:
            lo = max(lo, spec.class_bounds.p)
        if spec.class_bounds.q is not None:
            hi = min(hi, spec.class_bounds.q)
    n = spec.point_count
    edges = [
        (i, j, _draw(rng, lo, hi, mode, spec.resolution))
        for i in range(n)
        for j in range(i + 1, n)
    ]
    return graph_metric(WeightedGraph(n=n, edges=edges), to_mode(hi, mode), mode)


def perturb(
    M: FiniteMetricSpace,
    amount,
    rng: np.random.Generator,
    bounds: Optional[Tuple[object, object]] = None,
    resolution: int = 8,
) -> FiniteMetricSpace:
    """Mueve cada distancia como mucho `amount`, recorta a `bounds` y repara."""
    mode = M.mode
    amount = to_mode(amount, mode)
    edges = []
    hi_cap = None
    for i in range(M.n):
        for j in range(i + 1, M.n):
            base = M.dist(i, j)
            noise = _draw(rng, -amount, amount, mode, resolution) if amount > 0 else to_mode(0, mode)
            value = base + noise
            if bounds is not None:
                lo, hi = (to_mode(b, mode) for b in bounds)
                value = min(max(value, lo), hi)
                hi_cap = hi
            if not value > 0:
                value = base
            edges.append((i, j, value))
    if hi_cap is None:
        hi_cap = max((w for _, _, w in edges), default=to_mode(1, mode))
    return graph_metric(WeightedGraph(n=M.n, edges=edges), hi_cap, mode, labels=M.labels)
