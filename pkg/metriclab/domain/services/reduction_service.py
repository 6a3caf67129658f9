from __future__ import annotations
import logging
from typing import Any, Dict, Optional

from pydantic import TypeAdapter

from metriclab.core.settings import Settings
from metriclab.domain.abstractions.gadget import Gadget
from metriclab.domain.errors import InvalidGadgetParams
from metriclab.domain.gadget_provider import GadgetKind, create_gadget_factory, get_available_kinds
from metriclab.domain.normlab import norm_from_document
from metriclab.domain.schemas.metric import MetricDocument
from metriclab.domain.schemas.norms import NormDocument

logger = logging.getLogger(__name__)

_norm_adapter = TypeAdapter(NormDocument)


class ReductionService:
    """Construye gadgets a partir de un documento fuente (métrica o norma) y sus parámetros."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def kinds(self):
        return [create_gadget_factory(GadgetKind(k)).get_factory_info() for k in get_available_kinds()]

    def build(self, kind: str, source: Any, params: Optional[Dict[str, Any]] = None) -> Gadget:
        try:
            gadget_kind = GadgetKind(kind)
        except ValueError:
            raise InvalidGadgetParams(f"Gadget '{kind}' not supported. Available gadgets: {get_available_kinds()}")
        factory = create_gadget_factory(gadget_kind)
        if factory.source == "norm":
            origin = norm_from_document(_norm_adapter.validate_python(source))
        else:
            origin = MetricDocument.model_validate(source).to_space(
                self.settings.mode, self.settings.max_metric_points
            )
        model = factory.params_model().model_validate(params or {})
        gadget = factory.construct(origin, model)
        logger.info("built %s gadget with %d points", kind, gadget.n)
        return gadget

    def document(self, gadget: Gadget) -> MetricDocument:
        return MetricDocument(
            n=gadget.n,
            labels=gadget.labels(),
            d=gadget.space.rows(),
            provenance=gadget.provenance,
        )
