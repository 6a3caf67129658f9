"""
Configuración de la aplicación.

Orden de resolución: valores por defecto < flags de la CLI < variables de entorno.
La variable METRICLAB_MODE tiene prioridad sobre --mode.
"""
from __future__ import annotations
import os
from fractions import Fraction
from typing import Any, Mapping, Optional

from pydantic import BaseModel, Field

from metriclab.domain.numeric import NumericMode

PROJECT_ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), "..", ".."))

DEFAULT_ALPHA = Fraction(1004, 1000)
DEFAULT_DELTA = Fraction(200, 199) - DEFAULT_ALPHA


class Settings(BaseModel):
    mode: NumericMode = Field(NumericMode.RATIONAL, description="Modo numérico por defecto")
    gh_exhaustive_max: int = Field(7, ge=1, description="Búsqueda GH completa garantizada hasta este tamaño")
    bijection_exhaustive_max: int = Field(9, ge=1, description="Búsqueda de biyecciones completa hasta n")
    hl_exhaustive_cells: int = Field(16, ge=1, description="Búsqueda HL completa si nA*nB <= este valor")
    budget: Optional[int] = Field(None, ge=1, description="Límite de nodos de búsqueda (None = sin límite)")
    max_metric_points: int = Field(200, ge=1)
    max_gadget_points: int = Field(500, ge=1)
    samples: int = Field(1000, ge=1, description="Vectores aleatorios por chequeo puntual")
    alpha: float = Field(float(DEFAULT_ALPHA))
    delta: float = Field(float(DEFAULT_DELTA))
    log_dir: str = Field(os.path.join(PROJECT_ROOT, "logs"), description="Directorio del audit log")

    @classmethod
    def resolve(
        cls,
        overrides: Optional[Mapping[str, Any]] = None,
        environ: Optional[Mapping[str, str]] = None,
    ) -> "Settings":
        """Combina defaults, flags de la CLI (overrides) y variables de entorno."""
        environ = os.environ if environ is None else environ
        values = {k: v for k, v in (overrides or {}).items() if v is not None}
        if environ.get("METRICLAB_MODE"):
            values["mode"] = environ["METRICLAB_MODE"].strip().lower()
        if environ.get("METRICLAB_LOG_DIR"):
            values["log_dir"] = environ["METRICLAB_LOG_DIR"]
        if environ.get("METRICLAB_BUDGET"):
            values["budget"] = int(environ["METRICLAB_BUDGET"])
        return cls(**values)
