"""
Correspondencias (relaciones totales) y biyecciones entre conjuntos finitos.
"""
from __future__ import annotations
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

from metriclab.domain.errors import DimensionMismatch, WitnessInvalid


class Correspondence:
    """Relación nA×nB en la que cada fila y cada columna tiene al menos un par."""

    __slots__ = ("_rel",)

    def __init__(self, rel: np.ndarray):
        rel = np.asarray(rel, dtype=bool)
        if rel.ndim != 2:
            raise DimensionMismatch("correspondence must be a 2-D boolean matrix")
        if not rel.any(axis=1).all() or not rel.any(axis=0).all():
            raise WitnessInvalid("relation is not total on both sides")
        rel = rel.copy()
        rel.setflags(write=False)
        self._rel = rel

    @classmethod
    def from_pairs(cls, n_a: int, n_b: int, pairs: Iterable[Tuple[int, int]]) -> "Correspondence":
        rel = np.zeros((n_a, n_b), dtype=bool)
        for a, b in pairs:
            if not (0 <= a < n_a and 0 <= b < n_b):
                raise DimensionMismatch(f"pair ({a},{b}) outside {n_a}x{n_b}")
            rel[a, b] = True
        return cls(rel)

    @classmethod
    def identity(cls, n: int) -> "Correspondence":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def full(cls, n_a: int, n_b: int) -> "Correspondence":
        return cls(np.ones((n_a, n_b), dtype=bool))

    @classmethod
    def from_permutation(cls, perm: Sequence[int]) -> "Correspondence":
        n = len(perm)
        rel = np.zeros((n, n), dtype=bool)
        rel[np.arange(n), np.asarray(perm, dtype=int)] = True
        return cls(rel)

    @property
    def rel(self) -> np.ndarray:
        return self._rel

    @property
    def n_a(self) -> int:
        return self._rel.shape[0]

    @property
    def n_b(self) -> int:
        return self._rel.shape[1]

    def pairs(self) -> List[Tuple[int, int]]:
        return [(int(a), int(b)) for a, b in np.argwhere(self._rel)]

    def transpose(self) -> "Correspondence":
        return Correspondence(self._rel.T)

    def compose(self, other: "Correspondence") -> "Correspondence":
        """self ⊆ A×B, other ⊆ B×C  ->  other∘self ⊆ A×C."""
        if self.n_b != other.n_a:
            raise DimensionMismatch("correspondences are not composable")
        return Correspondence((self._rel.astype(int) @ other._rel.astype(int)) > 0)

    def is_bijection(self) -> bool:
        return self.n_a == self.n_b and bool((self._rel.sum(axis=1) == 1).all() and (self._rel.sum(axis=0) == 1).all())

    def __iter__(self) -> Iterator[Tuple[int, int]]:
        return iter(self.pairs())

    def __len__(self) -> int:
        return int(self._rel.sum())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Correspondence) and np.array_equal(self._rel, other._rel)

    def __hash__(self) -> int:
        return hash(self._rel.tobytes())

    def __repr__(self) -> str:
        return f"Correspondence({self.n_a}x{self.n_b}, {len(self)} pairs)"


def enumerate_correspondences(n_a: int, n_b: int) -> Iterator[Correspondence]:
    """Todas las relaciones totales entre {0..nA-1} y {0..nB-1} (oráculo de fuerza bruta)."""
    cells = n_a * n_b
    for mask in range(1, 1 << cells):
        rel = np.array([(mask >> c) & 1 for c in range(cells)], dtype=bool).reshape(n_a, n_b)
        if rel.any(axis=1).all() and rel.any(axis=0).all():
            yield Correspondence(rel)


def total_relation_masks(n_a: int, n_b: int) -> np.ndarray:
    """Matriz (R, nA*nB) con todas las relaciones totales, vectorizada por bits."""
    cells = n_a * n_b
    codes = np.arange(1, 1 << cells, dtype=np.int64)
    bits = ((codes[:, None] >> np.arange(cells, dtype=np.int64)[None, :]) & 1).astype(bool)
    grid = bits.reshape(-1, n_a, n_b)
    total = grid.any(axis=2).all(axis=1) & grid.any(axis=1).all(axis=1)
    return bits[total]
