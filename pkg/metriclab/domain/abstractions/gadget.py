from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from metriclab.domain.metric import FiniteMetricSpace

Tag = Tuple[Hashable, ...]


def tag_label(tag: Tag) -> str:
    """("p", 0, 1, -2) -> "p(0,1,-2)"; las tuplas anidadas (vectores) se aplanan entre corchetes."""
    head, *rest = tag
    if not rest:
        return str(head)

    def fmt(value: Any) -> str:
        if isinstance(value, tuple):
            return "[" + ",".join(fmt(v) for v in value) + "]"
        return str(value)

    return f"{head}(" + ",".join(fmt(v) for v in rest) + ")"


class Gadget:
    """Espacio métrico construido por una reducción, con etiquetas de puntos y procedencia."""

    __slots__ = ("_space", "_tags", "_index", "_provenance")

    def __init__(self, space: FiniteMetricSpace, tags: Sequence[Tag], provenance: Dict[str, Any]):
        if len(tags) != space.n:
            raise ValueError("one tag per gadget point is required")
        self._space = space
        self._tags: Tuple[Tag, ...] = tuple(tags)
        self._index = {t: i for i, t in enumerate(self._tags)}
        self._provenance = dict(provenance)

    @property
    def space(self) -> FiniteMetricSpace:
        return self._space

    @property
    def tags(self) -> Tuple[Tag, ...]:
        return self._tags

    @property
    def provenance(self) -> Dict[str, Any]:
        return dict(self._provenance)

    @property
    def n(self) -> int:
        return self._space.n

    def index(self, tag: Tag) -> int:
        return self._index[tag]

    def has(self, tag: Tag) -> bool:
        return tag in self._index

    def indices(self, kind: str) -> List[int]:
        """Índices de los puntos cuya etiqueta empieza por `kind`."""
        return [i for i, t in enumerate(self._tags) if t[0] == kind]

    def labels(self) -> List[str]:
        return [tag_label(t) for t in self._tags]

    def __repr__(self) -> str:
        return f"Gadget({self._provenance.get('construction', '?')}, n={self.n})"


class GadgetFactory(ABC):
    """Fábrica abstracta de gadgets: una por reducción."""

    kind: str = ""
    source: str = "metric"

    @abstractmethod
    def construct(self, source: Any, params: Any) -> Gadget:
        """Construye el gadget de `source` (espacio métrico u oráculo de norma)."""
        raise NotImplementedError

    @abstractmethod
    def params_model(self) -> type:
        """Modelo pydantic de parámetros aceptado por construct()."""
        raise NotImplementedError

    def get_factory_info(self) -> Dict[str, Any]:
        return {"kind": self.kind, "source": self.source, "params": self.params_model().__name__}


def tag_permutation(gadget_a: Gadget, gadget_b: Gadget, image: Dict[Tag, Tag]) -> Optional[List[int]]:
    """Permutación de índices inducida por un mapa de etiquetas (None si no es biyectiva)."""
    if len(image) != gadget_a.n or gadget_a.n != gadget_b.n:
        return None
    perm = [gadget_b.index(image[t]) for t in gadget_a.tags]
    return perm if len(set(perm)) == len(perm) else None
