from __future__ import annotations
import math
from fractions import Fraction
from typing import List

import numpy as np

from metriclab.domain.abstractions.suite import PropertySuite
from metriclab.domain.distances import (
    bijection_distortion,
    correspondence_through,
    distortion,
    gh_bijection,
    gh_exact,
    lipschitz_exact,
)
from metriclab.domain.gadgets.boundedness import bound, bound_correspondence, pi_from_gadget_witness
from metriclab.domain.gadgets.levels import (
    level_correspondence,
    level_crossing_pairs,
    lipschitz_gadget,
    restrict_to_level,
)
from metriclab.domain.gadgets.separation import separate
from metriclab.domain.numeric import half
from metriclab.domain.schemas.gadgets import LevelGadgetParams, SeparationGadgetParams
from metriclab.domain.schemas.suites import Observation

from .common import perturbed_pair, search_budget

BACKWARD_THRESHOLD = Fraction(1, 6)
LEVEL_DISTORTION = Fraction(2, 5)
LIP_LOWER = 2
LIP_UPPER = 4


class BoundForwardSuite(PropertySuite):
    name = "m5-m3-forward"
    description = "gh(bound M, bound N) <= gh(M, N) for M_5 pairs with gh(M, N) < 1"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        M, N = perturbed_pair(rng, 3, 5, 7, Fraction(1, 2), resolution=2)
        gh = gh_exact(M, N, exhaustive_max=self.settings.gh_exhaustive_max).value
        self.require(gh < 1, "inputs are not 1-close")
        perm = gh_bijection(M, N).witness.perm
        gm, gn = bound(M), bound(N)
        R = bound_correspondence(M, N, perm, gm, gn)
        upper = half(distortion(R, gm.space, gn.space))
        return [self.observe("forward-bound", upper, gh, self.describe(M=M, N=N))]


class BoundBackwardSuite(PropertySuite):
    """Extrae π de la mejor correspondencia entre gadgets y la compara con ρ_GH(M, N).

    π se construye con un ε estrictamente entre la distancia de los gadgets y 1/6,
    de modo que el testigo cumple dis R < 2ε. Las distancias se toman en [5, 23/4]
    para que ningún punto de camino quede a menos de 1/2 de un punto original.
    """

    name = "m5-m3-backward"
    description = "gh(M, N) <= 5 gh(bound M, bound N) whenever the gadget distance is below 1/6"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        M, N = perturbed_pair(rng, 3, 5, Fraction(23, 4), Fraction(1, 8), resolution=8)
        gm, gn = bound(M), bound(N)
        perm = gh_bijection(M, N).witness.perm
        seed = bound_correspondence(M, N, perm, gm, gn)
        cert = gh_exact(gm.space, gn.space, budget=search_budget(self.settings), hint=seed)
        self.require(cert.exact, "gadget search exhausted its budget")
        self.require(cert.value < BACKWARD_THRESHOLD, "gadgets are not 1/6-close")
        eps = half(cert.value + BACKWARD_THRESHOLD)
        relations = pi_from_gadget_witness(gm, gn, cert.witness.to_correspondence(), float(eps))
        inputs = self.describe(M=M, N=N)
        gh = gh_exact(M, N, exhaustive_max=self.settings.gh_exhaustive_max).value
        out = [
            self.observe("pi-bijective", 0 if relations.perm is not None else 1, 0, inputs),
            self.observe("backward-bound", gh, 5 * cert.value, inputs),
        ]
        if relations.perm is not None:
            pulled = half(bijection_distortion(M, N, relations.perm))
            out.append(self.observe("pullback-bound", pulled, 5 * eps, inputs))
        return out


class SeparationBoundsSuite(PropertySuite):
    """Pares cercanos (cada distancia movida ≤ 1/4 en [1, 3]): la correspondencia
    óptima es entonces una biyección, que se copia en cada capa del gadget."""

    name = "separate-bounds"
    description = "gh(sep M, sep N) <= gh(M, N), and gh(M, N) <= gh(sep M, sep N) when the latter is < p/2"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        amount = Fraction(int(rng.integers(0, 3)), 8)
        M, N = perturbed_pair(rng, 3, 1, 3, amount, resolution=8)
        params = SeparationGadgetParams(p=1, copies=2)
        limit = self.settings.gh_exhaustive_max
        gh = gh_exact(M, N, exhaustive_max=limit).value
        gadget_gh = gh_exact(separate(M, params).space, separate(N, params).space, exhaustive_max=limit).value
        inputs = self.describe(M=M, N=N)
        out = [self.observe("forward-bound", gadget_gh, gh, inputs)]
        if gadget_gh < half(params.p):
            out.append(self.observe("backward-bound", gh, gadget_gh, inputs))
        return out


class LipschitzGHClassSuite(PropertySuite):
    name = "lip-gh-class"
    description = "on M_2^4: gh < 1 gives lip <= log(1 + gh); lip < 1 gives gh <= 2 (e^lip - 1)"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        M, N = perturbed_pair(rng, 4, LIP_LOWER, LIP_UPPER, Fraction(1, 2), resolution=4)
        gh = gh_exact(M, N, exhaustive_max=self.settings.gh_exhaustive_max).value
        lip = lipschitz_exact(M, N, exhaustive_max=self.settings.bijection_exhaustive_max).value
        self.require(gh < 1 or lip < 1, "pair is neither gh- nor lip-close")
        inputs = self.describe(M=M, N=N)
        out = []
        if gh < 1:
            out.append(self.observe("lip-from-gh", lip, math.log1p(2 * float(gh) / LIP_LOWER), inputs))
        if lip < 1:
            out.append(self.observe("gh-from-lip", gh, LIP_UPPER * math.expm1(lip) / 2, inputs))
        return out


class LevelPreservationSuite(PropertySuite):
    """Gadgets de niveles sobre espacios de 2 puntos.

    Para cada par que cruza niveles se busca, de forma completa, una correspondencia
    con distorsión < 2/5 que lo contenga; no debe existir ninguna.
    """

    name = "level-preservation"
    description = "level gadgets: gh <= e^lip - 1, and no correspondence with distortion < 2/5 crosses levels"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        M, N = perturbed_pair(rng, 2, 1, 2, Fraction(1, 4), resolution=4)
        lip = lipschitz_exact(M, N)
        params = LevelGadgetParams(k_min=-1, k_max=1)
        gm, gn = lipschitz_gadget(M, params), lipschitz_gadget(N, params)
        forward = level_correspondence(gm, gn, lip.witness.perm)
        cert = gh_exact(gm.space, gn.space, budget=search_budget(self.settings), hint=forward)
        self.require(cert.exact, "gadget search exhausted its budget")

        inputs = self.describe(M=M, N=N)
        upper = half(distortion(forward, gm.space, gn.space))
        out = [self.observe("forward-level-bound", upper, math.expm1(lip.value), inputs)]
        crossing = [
            pair for pair in level_crossing_pairs(gm, gn)
            if correspondence_through(gm.space, gn.space, pair, LEVEL_DISTORTION) is not None
        ]
        out.append(self.observe("levels-preserved", len(crossing), 0, inputs))
        if 2 * cert.value < LEVEL_DISTORTION:
            total = restrict_to_level(gm, gn, cert.witness.to_correspondence(), 0) is not None
            out.append(self.observe("level-0-restriction", 0 if total else 1, 0, inputs))
        return out
