from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Any, Optional

from pydantic import BaseModel


class DocumentRepositoryPort(ABC):
    """Lectura y escritura de documentos JSON (métricas, normas, parámetros, informes)."""

    @abstractmethod
    def load(self, path: str) -> Any: ...

    @abstractmethod
    def save(self, document: Any, path: Optional[str] = None) -> str: ...

    @abstractmethod
    def render(self, document: Any) -> str: ...


def as_json_ready(document: Any) -> Any:
    if isinstance(document, BaseModel):
        return document.model_dump(mode="json", by_alias=True)
    return document
