from __future__ import annotations
import json
import os
from typing import Any, Optional

from metriclab.domain.ports import DocumentRepositoryPort, as_json_ready


class JsonDocumentRepository(DocumentRepositoryPort):
    """Documentos JSON en disco; sin ruta, save() sólo devuelve el texto."""

    def load(self, path: str) -> Any:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)

    def render(self, document: Any) -> str:
        return json.dumps(as_json_ready(document), indent=2, ensure_ascii=False)

    def save(self, document: Any, path: Optional[str] = None) -> str:
        text = self.render(document)
        if path:
            folder = os.path.dirname(os.path.abspath(path))
            os.makedirs(folder, exist_ok=True)
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        return text


# Instancia global compartida por el contenedor
repository = JsonDocumentRepository()
