from .metric_builder import GraphMetricBuilder, MatrixMetricBuilder, PartialMetricBuilder, MAX_GADGET_POINTS
from .director import GadgetDirector

__all__ = [
    "PartialMetricBuilder",
    "GraphMetricBuilder",
    "MatrixMetricBuilder",
    "GadgetDirector",
    "MAX_GADGET_POINTS",
]
