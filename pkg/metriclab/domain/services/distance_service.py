from __future__ import annotations
import logging
from typing import Any, Optional, Sequence

from metriclab.core.settings import Settings
from metriclab.domain.distances import (
    gh_bijection,
    gh_exact,
    hausdorff,
    hl_close,
    lipschitz_exact,
)
from metriclab.domain.errors import BudgetExhausted, DimensionMismatch
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.schemas.certificate import DistanceCertificate, HLClosenessResult
from metriclab.domain.schemas.metric import MetricDocument

logger = logging.getLogger(__name__)

DISTANCE_KINDS = ("gh", "gh-bij", "lip", "hausdorff", "hl")


class DistanceService:
    def __init__(self, settings: Settings):
        self.settings = settings

    def load_space(self, raw: Any) -> FiniteMetricSpace:
        doc = MetricDocument.model_validate(raw)
        return doc.to_space(self.settings.mode, self.settings.max_metric_points)

    def canonical(self, raw: Any) -> MetricDocument:
        """Documento re-emitido tras validar (modo numérico de la configuración)."""
        doc = MetricDocument.model_validate(raw)
        return MetricDocument.of(doc.to_space(self.settings.mode, self.settings.max_metric_points), doc.provenance)

    def distance(
        self,
        kind: str,
        M: FiniteMetricSpace,
        N: Optional[FiniteMetricSpace] = None,
        *,
        subset_a: Sequence[int] = (),
        subset_b: Sequence[int] = (),
        eps: Any = None,
        require_exact: bool = False,
    ):
        s = self.settings
        if kind == "hausdorff":
            return DistanceCertificate(distance="hausdorff", value=hausdorff(M, subset_a, subset_b))
        if N is None:
            raise DimensionMismatch(f"'{kind}' needs two metric documents")
        if kind == "gh":
            result = gh_exact(M, N, budget=s.budget, exhaustive_max=s.gh_exhaustive_max)
        elif kind == "gh-bij":
            result = gh_bijection(M, N, budget=s.budget, exhaustive_max=s.bijection_exhaustive_max)
        elif kind == "lip":
            result = lipschitz_exact(M, N, budget=s.budget, exhaustive_max=s.bijection_exhaustive_max)
        elif kind == "hl":
            if eps is None:
                raise ValueError("hl needs --eps")
            result = hl_close(M, N, eps, budget=s.budget, exhaustive_cells=s.hl_exhaustive_cells)
        else:
            raise ValueError(f"Distance '{kind}' not supported. Available distances: {list(DISTANCE_KINDS)}")
        self._check_exact(result, require_exact)
        return result

    def _check_exact(self, result, require_exact: bool) -> None:
        if isinstance(result, HLClosenessResult):
            exact = result.complete or result.found
        else:
            exact = result.exact
        if not exact:
            logger.info("%s search stopped at the node budget", getattr(result, "distance", "hl"))
            if require_exact:
                raise BudgetExhausted("search budget exhausted before the result was proven exact",
                                      {"nodes": result.nodes})
