from .metric import MetricDocument
from .certificate import (
    BijectionWitness,
    BoundCheck,
    CorrespondenceWitness,
    DistanceCertificate,
    HLClosenessResult,
    HLUpperBound,
)
from .gadgets import (
    BackwardRelations,
    BmGadgetParams,
    BoundGadgetParams,
    KadetsGadgetParams,
    LevelGadgetParams,
    SeparationGadgetParams,
)
from .norms import CoefficientNorm, PermutationDistortion
from .games import DualityReport, GameMove, GameValue
from .suites import Failure, Observation, SuiteReport
from .logs import AuditLogEntry, LogsQuery

__all__ = [
    "MetricDocument",
    "BijectionWitness", "BoundCheck", "CorrespondenceWitness", "DistanceCertificate",
    "HLClosenessResult", "HLUpperBound",
    "BackwardRelations", "BmGadgetParams", "BoundGadgetParams", "KadetsGadgetParams",
    "LevelGadgetParams", "SeparationGadgetParams",
    "CoefficientNorm", "PermutationDistortion",
    "DualityReport", "GameMove", "GameValue",
    "Failure", "Observation", "SuiteReport",
    "AuditLogEntry", "LogsQuery",
]
