"""
Registro de suites de propiedades (nombre CLI -> clase).
"""
from typing import Dict, List, Type

from metriclab.domain.abstractions.suite import PropertySuite
from metriclab.domain.errors import UnknownSuite

from .game_suites import GameDualitySuite
from .metric_suites import GHOracleSuite, GHTriangleSuite, HLPhi2Suite
from .norm_suites import LemmsepSuite, NormAxiomsSuite, PermutationDistortionChainSuite, PnmRadiusSuite
from .reduction_suites import (
    BoundBackwardSuite,
    BoundForwardSuite,
    LevelPreservationSuite,
    LipschitzGHClassSuite,
    SeparationBoundsSuite,
)


class SuiteRegistry:
    def __init__(self):
        self._suites: Dict[str, Type[PropertySuite]] = {}
        for suite in (
            GHOracleSuite,
            GHTriangleSuite,
            BoundForwardSuite,
            BoundBackwardSuite,
            SeparationBoundsSuite,
            LipschitzGHClassSuite,
            LevelPreservationSuite,
            NormAxiomsSuite,
            LemmsepSuite,
            PnmRadiusSuite,
            PermutationDistortionChainSuite,
            GameDualitySuite,
            HLPhi2Suite,
        ):
            self.register(suite)

    def register(self, suite_class: Type[PropertySuite]) -> None:
        self._suites[suite_class.name] = suite_class

    def get(self, name: str) -> Type[PropertySuite]:
        if name not in self._suites:
            raise UnknownSuite(
                f"Suite '{name}' not supported. Available suites: {self.names()}",
                {"suite": name},
            )
        return self._suites[name]

    def names(self) -> List[str]:
        return list(self._suites)


suite_registry = SuiteRegistry()

__all__ = ["SuiteRegistry", "suite_registry"]
