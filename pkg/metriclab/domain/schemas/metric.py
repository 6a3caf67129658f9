from __future__ import annotations
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from metriclab.domain.errors import NotSquare
from metriclab.domain.metric import FiniteMetricSpace, validate_metric
from metriclab.domain.numeric import Number, NumericMode


class MetricDocument(BaseModel):
    """Documento JSON de un espacio métrico finito (distancias por filas)."""

    kind: Literal["metric"] = "metric"
    n: int = Field(..., ge=1)
    labels: Optional[List[str]] = None
    d: List[List[Number]]
    provenance: Optional[Dict[str, Any]] = Field(None, description="Construcción y parámetros de un gadget")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {"kind": "metric", "n": 2, "labels": ["a", "b"], "d": [["0", "1"], ["1", "0"]]}
        }
    )

    @classmethod
    def of(cls, space: FiniteMetricSpace, provenance: Optional[Dict[str, Any]] = None) -> "MetricDocument":
        return cls(
            n=space.n,
            labels=list(space.labels) if space.labels else None,
            d=space.rows(),
            provenance=provenance,
        )

    def to_space(self, mode: Optional[NumericMode] = None, max_points: int = 200) -> FiniteMetricSpace:
        if len(self.d) != self.n:
            raise NotSquare(f"document declares n={self.n} but has {len(self.d)} rows")
        return validate_metric(self.d, self.labels, mode, max_points=max_points)
