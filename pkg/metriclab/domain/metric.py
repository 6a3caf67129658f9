"""
Espacios métricos finitos y operaciones básicas.

Un FiniteMetricSpace es inmutable: la matriz se congela (write=False) al
construirse y todas las operaciones devuelven espacios nuevos.
"""
from __future__ import annotations
import logging
import math
from fractions import Fraction
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from scipy.sparse.csgraph import shortest_path

from metriclab.domain.errors import (
    NonPositiveOffDiagonal,
    NonZeroDiagonal,
    NotSquare,
    NotSymmetric,
    SizeLimitExceeded,
    TriangleViolation,
)
from metriclab.domain.numeric import (
    Number,
    NumericMode,
    Scalar,
    as_matrix,
    freeze,
    infer_mode,
    mode_of,
    to_mode,
    tolerance,
)

logger = logging.getLogger(__name__)

MAX_METRIC_POINTS = 200


class FiniteMetricSpace:
    """n puntos con matriz de distancias simétrica validada."""

    __slots__ = ("_d", "_labels")

    def __init__(self, d: np.ndarray, labels: Optional[Sequence[str]] = None):
        # usar validate_metric para entradas externas; este constructor confía en d
        if labels is not None and len(labels) != d.shape[0]:
            raise NotSquare("labels length does not match point count")
        self._d = freeze(d)
        self._labels = tuple(labels) if labels is not None else None

    @property
    def n(self) -> int:
        return self._d.shape[0]

    @property
    def d(self) -> np.ndarray:
        return self._d

    @property
    def labels(self) -> Optional[Tuple[str, ...]]:
        return self._labels

    @property
    def mode(self) -> NumericMode:
        return mode_of(self._d)

    def dist(self, i: int, j: int) -> Scalar:
        return self._d[i, j]

    def label(self, i: int) -> str:
        return self._labels[i] if self._labels else str(i)

    def rows(self) -> List[List[Scalar]]:
        return [list(row) for row in self._d]

    def __len__(self) -> int:
        return self.n

    def __repr__(self) -> str:
        return f"FiniteMetricSpace(n={self.n}, mode={self.mode.value})"


class ClassBounds(BaseModel):
    """Cotas de la clase M_p^q (cualquiera de las dos puede faltar)."""

    model_config = ConfigDict(frozen=True)

    p: Optional[Number] = Field(None, description="Distancia no nula mínima")
    q: Optional[Number] = Field(None, description="Distancia máxima")

    @model_validator(mode="after")
    def _check_order(self) -> "ClassBounds":
        for value in (self.p, self.q):
            if value is not None and not value > 0:
                raise ValueError("class bounds must be positive")
        if self.p is not None and self.q is not None and not self.p < self.q:
            raise ValueError("p must be smaller than q")
        return self


class WeightedGraph(BaseModel):
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1)
    edges: List[Tuple[int, int, Number]] = Field(default_factory=list)

    @field_validator("edges")
    @classmethod
    def _check_edges(cls, edges: List[Tuple[int, int, Any]]) -> List[Tuple[int, int, Any]]:
        seen = set()
        for i, j, w in edges:
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not w > 0:
                raise ValueError(f"edge ({i},{j}) has non-positive weight")
            key = (min(i, j), max(i, j))
            if key in seen:
                raise ValueError(f"duplicate edge {key}")
            seen.add(key)
        return edges

    @model_validator(mode="after")
    def _check_range(self) -> "WeightedGraph":
        for i, j, _ in self.edges:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i},{j}) outside 0..{self.n - 1}")
        return self


def validate_metric(
    matrix: Any,
    labels: Optional[Sequence[str]] = None,
    mode: Optional[NumericMode] = None,
    max_points: int = MAX_METRIC_POINTS,
) -> FiniteMetricSpace:
    """Valida una matriz de distancias y devuelve el espacio.

    Simetría y desigualdad triangular se comprueban con tolerancia TAU_EQ
    en modo float y exactamente en modo racional.
    """
    rows = [list(r) for r in (matrix.tolist() if isinstance(matrix, np.ndarray) else matrix)]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise NotSquare(f"distance matrix must be square and non-empty, got {n} rows")
    if n > max_points:
        raise SizeLimitExceeded(f"{n} points exceed the limit of {max_points}", {"n": n, "limit": max_points})
    if mode is None:
        mode = infer_mode(x for r in rows for x in r)
    d = as_matrix(rows, mode)
    tol = tolerance(mode)

    for i in range(n):
        if d[i, i] != 0:
            raise NonZeroDiagonal(f"d[{i}][{i}] = {d[i, i]} is not zero", {"i": i})
    asym = np.argwhere((np.abs(d - d.T) > tol).astype(bool))
    if len(asym):
        i, j = (int(v) for v in asym[0])
        raise NotSymmetric(f"d[{i}][{j}] != d[{j}][{i}]", {"i": i, "j": j})
    off = ~np.eye(n, dtype=bool)
    bad = np.argwhere(off & ~(d > 0).astype(bool))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise NonPositiveOffDiagonal(f"d[{i}][{j}] = {d[i, j]} must be positive", {"i": i, "j": j})

    # simetría exacta: se copia el triángulo superior
    upper = np.triu_indices(n, 1)
    d[(upper[1], upper[0])] = d[upper]

    for j in range(n):
        via = d[:, j][:, None] + d[j, :][None, :]
        hits = np.argwhere((d > via + tol).astype(bool))
        if len(hits):
            i, k = (int(v) for v in hits[0])
            raise TriangleViolation(i, j, k)
    return FiniteMetricSpace(d, labels)


def in_class(M: FiniteMetricSpace, c: ClassBounds) -> bool:
    tol = tolerance(M.mode)
    off = M.d[~np.eye(M.n, dtype=bool)]
    if c.p is not None and any(x < to_mode(c.p, M.mode) - tol for x in off):
        return False
    if c.q is not None and any(x > to_mode(c.q, M.mode) + tol for x in off):
        return False
    return True


def scale(M: FiniteMetricSpace, c: Any) -> FiniteMetricSpace:
    factor = to_mode(c, M.mode)
    if not factor > 0:
        raise ValueError("scale factor must be positive")
    return FiniteMetricSpace(M.d * factor, M.labels)


def rescale_to_class(M: FiniteMetricSpace, source: ClassBounds, target: ClassBounds) -> FiniteMetricSpace:
    """Reescalados entre clases: M_p -> M_5 (d*5/p) y M^3 -> M^q (d*q/3)."""
    if source.p is not None and target.p is not None:
        return scale(M, Fraction(target.p) / Fraction(source.p) if M.mode is NumericMode.RATIONAL
                     else float(target.p) / float(source.p))
    if source.q is not None and target.q is not None:
        return scale(M, Fraction(target.q) / Fraction(source.q) if M.mode is NumericMode.RATIONAL
                     else float(target.q) / float(source.q))
    raise ValueError("source and target must share a bound kind (p or q)")


def graph_metric(
    g: WeightedGraph,
    cap: Any,
    mode: NumericMode = NumericMode.RATIONAL,
    labels: Optional[Sequence[str]] = None,
    max_points: int = MAX_METRIC_POINTS,
) -> FiniteMetricSpace:
    """min(camino más corto, cap) para cada par; componentes distintas reciben cap."""
    cap = to_mode(cap, mode)
    if not cap > 0:
        raise ValueError("cap must be positive")
    n = g.n
    if mode is NumericMode.FLOAT:
        dense = np.zeros((n, n), dtype=float)
        for i, j, w in g.edges:
            dense[i, j] = dense[j, i] = float(w)
        d = shortest_path(dense, method="auto", directed=False)
        d = np.minimum(d, float(cap))
    else:
        d = np.full((n, n), math.inf, dtype=object)
        for i, j, w in g.edges:
            d[i, j] = d[j, i] = to_mode(w, mode)
        for k in range(n):
            d[k, k] = Fraction(0)
        for k in range(n):
            d = np.minimum(d, d[:, k][:, None] + d[k, :][None, :])
        d = np.minimum(d, cap)
    np.fill_diagonal(d, 0 if mode is NumericMode.FLOAT else Fraction(0))
    return validate_metric(d, labels, mode, max_points=max_points)


def diameter(M: FiniteMetricSpace) -> Scalar:
    return M.d.max()


def min_distance(M: FiniteMetricSpace) -> Scalar:
    if M.n < 2:
        return math.inf
    return M.d[~np.eye(M.n, dtype=bool)].min()


def submetric(M: FiniteMetricSpace, indices: Sequence[int]) -> FiniteMetricSpace:
    idx = list(indices)
    labels = [M.label(i) for i in idx] if M.labels else None
    return FiniteMetricSpace(M.d[np.ix_(idx, idx)].copy(), labels)
