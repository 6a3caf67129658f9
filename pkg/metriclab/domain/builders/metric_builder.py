from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Any, Dict, Iterable, List, Tuple

from metriclab.domain.abstractions.gadget import Tag, tag_label
from metriclab.domain.errors import GadgetTooLarge
from metriclab.domain.metric import FiniteMetricSpace, WeightedGraph, graph_metric, validate_metric
from metriclab.domain.numeric import NumericMode, to_mode, zeros

MAX_GADGET_POINTS = 500


class PartialMetricBuilder(ABC):
    """
    Builder de métricas parciales: se añaden puntos etiquetados y distancias
    conocidas; build() completa o valida según la variante concreta.
    """

    def __init__(self, max_points: int = MAX_GADGET_POINTS):
        self.max_points = max_points
        self.reset()

    def reset(self) -> None:
        self._tags: List[Tag] = []
        self._index: Dict[Tag, int] = {}
        self._entries: Dict[Tuple[int, int], Any] = {}

    def add_point(self, tag: Tag) -> "PartialMetricBuilder":
        if tag in self._index:
            raise ValueError(f"duplicate gadget point {tag_label(tag)}")
        if len(self._tags) >= self.max_points:
            raise GadgetTooLarge(
                f"gadget exceeds {self.max_points} points",
                {"limit": self.max_points},
            )
        self._index[tag] = len(self._tags)
        self._tags.append(tag)
        return self

    def add_points(self, tags: Iterable[Tag]) -> "PartialMetricBuilder":
        for tag in tags:
            self.add_point(tag)
        return self

    def set_distance(self, a: Tag, b: Tag, value: Any) -> "PartialMetricBuilder":
        i, j = self._index[a], self._index[b]
        if i == j:
            raise ValueError(f"distance of {tag_label(a)} to itself is fixed at 0")
        key = (min(i, j), max(i, j))
        current = self._entries.get(key)
        # aristas paralelas: se queda la más corta
        self._entries[key] = value if current is None else min(current, value)
        return self

    @property
    def size(self) -> int:
        return len(self._tags)

    def tags(self) -> List[Tag]:
        return list(self._tags)

    def peek(self) -> Dict[Tuple[int, int], Any]:
        return self._entries

    @abstractmethod
    def build(self, mode: NumericMode) -> FiniteMetricSpace:
        raise NotImplementedError


class GraphMetricBuilder(PartialMetricBuilder):
    """Completa las distancias dadas con la métrica de caminos más cortos acotada por `cap`."""

    def __init__(self, cap: Any, max_points: int = MAX_GADGET_POINTS):
        self.cap = cap
        super().__init__(max_points)

    def build(self, mode: NumericMode) -> FiniteMetricSpace:
        edges = [(i, j, to_mode(w, mode)) for (i, j), w in sorted(self._entries.items())]
        graph = WeightedGraph(n=self.size, edges=edges)
        labels = [tag_label(t) for t in self._tags]
        return graph_metric(graph, self.cap, mode, labels=labels, max_points=self.max_points)


class MatrixMetricBuilder(PartialMetricBuilder):
    """Todas las distancias vienen dadas por una fórmula; build() sólo valida."""

    def build(self, mode: NumericMode) -> FiniteMetricSpace:
        n = self.size
        expected = n * (n - 1) // 2
        if len(self._entries) != expected:
            raise ValueError(f"{expected - len(self._entries)} distances are missing")
        d = zeros(n, n, mode)
        for (i, j), w in self._entries.items():
            d[i, j] = d[j, i] = to_mode(w, mode)
        labels = [tag_label(t) for t in self._tags]
        return validate_metric(d, labels, mode, max_points=self.max_points)
