from __future__ import annotations
from abc import ABC, abstractmethod
from typing import Any, Dict, List

import numpy as np

from metriclab.core.settings import Settings
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import serialize_number
from metriclab.domain.schemas.suites import Observation


class TrialInconclusive(Exception):
    """El ensayo no pudo decidir (precondición falsa o búsqueda sin terminar)."""


class PropertySuite(ABC):
    """Suite aleatorizada: cada ensayo devuelve las comprobaciones que realizó."""

    name: str = ""
    description: str = ""

    def __init__(self, settings: Settings):
        self.settings = settings

    @abstractmethod
    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        raise NotImplementedError

    @staticmethod
    def observe(check: str, observed: Any, bound: Any, inputs: Dict[str, Any], tol: float = 1e-9) -> Observation:
        """Comprobación observed ≤ bound (+tol); margin = bound − observed."""
        margin = float(bound) - float(observed)
        return Observation(
            check=check,
            observed=float(observed),
            bound=float(bound),
            margin=margin,
            holds=margin >= -tol,
            inputs=inputs,
        )

    @staticmethod
    def require(condition: bool, reason: str) -> None:
        if not condition:
            raise TrialInconclusive(reason)

    @staticmethod
    def describe(**spaces: FiniteMetricSpace) -> Dict[str, Any]:
        """Entradas reproducibles de un ensayo: matrices con números serializados."""
        return {
            name: [[serialize_number(x) for x in row] for row in space.rows()]
            for name, space in spaces.items()
        }
