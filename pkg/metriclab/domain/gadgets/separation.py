from __future__ import annotations
from typing import List

from metriclab.domain.abstractions.gadget import Gadget, GadgetFactory, Tag
from metriclab.domain.builders import GadgetDirector, MatrixMetricBuilder
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import to_mode
from metriclab.domain.schemas.gadgets import SeparationGadgetParams


class SeparationGadgetFactory(GadgetFactory):
    """M -> M × {1..copies} con d((i,a),(j,b)) = d(i,j) + p para puntos distintos."""

    kind = "separate"

    def params_model(self) -> type:
        return SeparationGadgetParams

    def construct(self, source: FiniteMetricSpace, params: SeparationGadgetParams) -> Gadget:
        mode = source.mode
        p = to_mode(params.p, mode)
        points: List[Tag] = [("s", i, a) for a in range(params.copies) for i in range(source.n)]
        distances = [
            (s, t, source.dist(s[1], t[1]) + p)
            for x, s in enumerate(points)
            for t in points[x + 1:]
        ]
        return GadgetDirector().construct(
            MatrixMetricBuilder(),
            construction=self.kind,
            points=points,
            distances=distances,
            mode=mode,
            params=params.model_dump(mode="json"),
            source_size=source.n,
        )


def separate(M: FiniteMetricSpace, params: SeparationGadgetParams) -> Gadget:
    return SeparationGadgetFactory().construct(M, params)
