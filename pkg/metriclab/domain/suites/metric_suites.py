from __future__ import annotations
from fractions import Fraction
from typing import List

import numpy as np

from metriclab.domain.abstractions.suite import PropertySuite
from metriclab.domain.correspondence import Correspondence
from metriclab.domain.distances import (
    gh_bijection,
    gh_brute_force,
    gh_exact,
    hl_close,
    hl_upper_from_witness,
    hl_witnesses,
    phi2,
)
from metriclab.domain.schemas.suites import Observation

from .common import perturbed_pair, random_space

HL_EPSILONS = (Fraction(1, 20), Fraction(1, 10))


class GHOracleSuite(PropertySuite):
    name = "gh-oracle"
    description = "gh_exact equals full correspondence enumeration; gh = gh_bijection on close M_5 pairs"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        n_a, n_b = (int(v) for v in rng.integers(3, 5, size=2))
        M = random_space(rng, n_a, 1, 3, resolution=4)
        N = random_space(rng, n_b, 1, 3, resolution=4)
        solver = gh_exact(M, N, exhaustive_max=self.settings.gh_exhaustive_max).value
        oracle = gh_brute_force(M, N)
        out = [self.observe("gh-equals-enumeration", abs(solver - oracle), 0, self.describe(M=M, N=N))]

        # espacios uniformemente discretos: p = 5, ρ_GH < 5/2
        size = int(rng.integers(3, 5))
        P = random_space(rng, size, 5, 8, resolution=4)
        Q = random_space(rng, size, 5, 8, resolution=4)
        gh = gh_exact(P, Q, exhaustive_max=self.settings.gh_exhaustive_max).value
        if gh < Fraction(5, 2):
            bij = gh_bijection(P, Q, exhaustive_max=self.settings.bijection_exhaustive_max).value
            out.append(self.observe("gh-equals-bijection", abs(gh - bij), 0, self.describe(M=P, N=Q)))
        return out


class GHTriangleSuite(PropertySuite):
    name = "gh-triangle"
    description = "gh is symmetric and satisfies the triangle inequality"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        M, N, P = (random_space(rng, int(rng.integers(2, 5)), 1, 3, resolution=4) for _ in range(3))
        limit = self.settings.gh_exhaustive_max
        mn = gh_exact(M, N, exhaustive_max=limit).value
        nm = gh_exact(N, M, exhaustive_max=limit).value
        np_ = gh_exact(N, P, exhaustive_max=limit).value
        mp = gh_exact(M, P, exhaustive_max=limit).value
        inputs = self.describe(M=M, N=N, P=P)
        return [
            self.observe("symmetry", abs(mn - nm), 0, inputs),
            self.observe("triangle", mp, mn + np_, inputs),
        ]


class HLPhi2Suite(PropertySuite):
    name = "hl-phi2"
    description = "every intermediate bound of the net chain holds and the bound equals phi2(eps)"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        eps = HL_EPSILONS[trial % len(HL_EPSILONS)]
        M, N = perturbed_pair(rng, 5, Fraction(1, 8), 2, eps / 2, resolution=80)
        R = Correspondence.identity(M.n)
        if not hl_witnesses(M, N, eps, R):
            found = hl_close(M, N, eps, budget=self.settings.budget,
                             exhaustive_cells=self.settings.hl_exhaustive_cells)
            self.require(found.found, f"no HL({eps}) witness found")
            R = found.witness.to_correspondence()
        result = hl_upper_from_witness(M, N, eps, R, seed=trial)
        inputs = dict(self.describe(M=M, N=N), eps=str(eps))
        out = [self.observe("value-is-phi2", abs(float(result.value) - phi2(float(eps))), 0, inputs, tol=1e-12)]
        for check in result.checks:
            if check.name == "source-net-separated":
                out.append(self.observe(check.name, check.bound, check.observed, inputs))
            else:
                out.append(self.observe(check.name, check.observed, check.bound, inputs))
        return out
