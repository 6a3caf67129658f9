from __future__ import annotations
from typing import Any, Optional, Sequence

from metriclab.core.settings import Settings
from metriclab.domain.games import DUALITY_MAX_POINTS, GameSolver, duality_check
from metriclab.domain.metric import FiniteMetricSpace
from metriclab.domain.numeric import to_mode
from metriclab.domain.schemas.games import DualityReport, GameValue


class GameService:
    def __init__(self, settings: Settings):
        self.settings = settings

    def play(
        self,
        M: FiniteMetricSpace,
        N: FiniteMetricSpace,
        depth: int,
        eps: Any = None,
        xs: Sequence[int] = (),
        ys: Sequence[int] = (),
    ) -> GameValue:
        solver = GameSolver(M, N)
        value = solver.value(xs, ys, depth)
        stable: Optional[bool] = None
        if M.n + N.n <= DUALITY_MAX_POINTS:
            stable = value == solver.value(xs, ys, max(depth, M.n + N.n))
        winner = None
        if eps is not None:
            eps = to_mode(eps, solver.mode)
            if not eps > 0:
                raise ValueError("eps must be positive")
            winner = "II" if value < eps else "I"
        return GameValue(
            value=value,
            depth=depth,
            stable=stable,
            eps=eps,
            winner=winner,
            principal_variation=solver.principal_variation(xs, ys, depth),
        )

    def duality(self, M: FiniteMetricSpace, N: FiniteMetricSpace) -> DualityReport:
        return duality_check(M, N)
