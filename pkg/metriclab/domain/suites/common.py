"""
Generadores de instancias compartidos por las suites.
"""
from __future__ import annotations
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from metriclab.core.settings import Settings
from metriclab.domain.instances import RandomInstanceSpec, perturb, random_metric
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import NumericMode

SEARCH_BUDGET = 5_000


def random_space(
    rng: np.random.Generator,
    n: int,
    lo,
    hi,
    resolution: int = 8,
    mode: NumericMode = NumericMode.RATIONAL,
) -> FiniteMetricSpace:
    spec = RandomInstanceSpec(point_count=n, distance_range=(Fraction(lo), Fraction(hi)), resolution=resolution)
    return random_metric(spec, mode, rng)


def perturbed_pair(
    rng: np.random.Generator,
    n: int,
    lo,
    hi,
    amount,
    resolution: int = 8,
) -> Tuple[FiniteMetricSpace, FiniteMetricSpace]:
    """M aleatorio en [lo, hi] y N = M con cada distancia movida como mucho `amount`."""
    M = random_space(rng, n, lo, hi, resolution)
    N = perturb(M, Fraction(amount), rng, bounds=(Fraction(lo), Fraction(hi)), resolution=resolution)
    return M, N


def search_budget(settings: Settings, default: Optional[int] = SEARCH_BUDGET) -> Optional[int]:
    return settings.budget if settings.budget is not None else default
