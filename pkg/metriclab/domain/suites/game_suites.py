from __future__ import annotations
from typing import List

import numpy as np

from metriclab.domain.abstractions.suite import PropertySuite
from metriclab.domain.games import GameSolver, cost_transitivity, duality_check
from metriclab.domain.schemas.suites import Observation

from .common import random_space

MAX_TOTAL = 7
TUPLE_LENGTH = 3


class GameDualitySuite(PropertySuite):
    name = "game-duality"
    description = "stabilized game value equals gh, values are depth-monotone, the any-smaller rule agrees"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        n_a = int(rng.integers(2, 5))
        n_b = int(rng.integers(2, min(4, MAX_TOTAL - n_a) + 1))
        M = random_space(rng, n_a, 1, 3, resolution=2)
        N = random_space(rng, n_b, 1, 3, resolution=2)
        solver = GameSolver(M, N)
        report = duality_check(M, N, solver)
        inputs = self.describe(M=M, N=N)
        depth = int(rng.integers(1, 4))
        rule_gap = abs(solver.value(depth=depth) - solver.value_any_smaller(depth=depth))
        out = [
            self.observe("matches-gh", 0 if report.matches_gh else 1, 0, inputs),
            self.observe("depth-monotone", 0 if report.monotone else 1, 0, inputs),
            self.observe("any-smaller-rule", rule_gap, 0, dict(inputs, depth=depth)),
        ]

        P = random_space(rng, int(rng.integers(2, 5)), 1, 3, resolution=2)
        xs, ys, zs = (rng.integers(0, S.n, size=TUPLE_LENGTH).tolist() for S in (M, N, P))
        check = cost_transitivity(M, N, P, xs, ys, zs)
        out.append(self.observe(
            "cost-transitivity", check.composed, check.first + check.second,
            dict(self.describe(M=M, N=N, P=P), xs=xs, ys=ys, zs=zs),
        ))
        return out
