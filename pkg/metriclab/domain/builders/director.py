from __future__ import annotations
import logging
from typing import Any, Dict, Iterable, Optional, Sequence, Tuple

from metriclab.domain.abstractions.gadget import Gadget, Tag
from metriclab.domain.builders.metric_builder import PartialMetricBuilder
from metriclab.domain.numeric import NumericMode

logger = logging.getLogger(__name__)


class GadgetDirector:
    """
    Director que arma un gadget con un Builder: registra los puntos en orden,
    carga las distancias conocidas y delega el cierre (grafo acotado o fórmula
    completa) en build().
    """

    def construct(
        self,
        builder: PartialMetricBuilder,
        *,
        construction: str,
        points: Sequence[Tag],
        distances: Iterable[Tuple[Tag, Tag, Any]],
        mode: NumericMode,
        params: Optional[Dict[str, Any]] = None,
        source_size: Optional[int] = None,
    ) -> Gadget:
        builder.reset()
        builder.add_points(points)
        for a, b, value in distances:
            builder.set_distance(a, b, value)
        known = len(builder.peek())
        space = builder.build(mode)
        logger.info("%s gadget: %d points, %d given distances", construction, space.n, known)
        provenance: Dict[str, Any] = {"construction": construction, "params": params or {}}
        if source_size is not None:
            provenance["sourceSize"] = source_size
        return Gadget(space, builder.tags(), provenance)
