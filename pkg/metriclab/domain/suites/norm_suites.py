from __future__ import annotations
import itertools
import math
from typing import List

import numpy as np

from metriclab.domain.abstractions.suite import PropertySuite
from metriclab.domain.distances import gh_bijection
from metriclab.domain.normlab import (
    CoefficientNormOracle,
    coefficient_metric,
    e_nm,
    lemmsep_table,
    norm_eval,
    pnm_member,
    pnm_radius,
    pnm_signed_membership,
    permutation_distortion,
    random_coefficient_norm,
)
from metriclab.domain.schemas.norms import UPPER_CONSTANT
from metriclab.domain.schemas.suites import Observation

NORM_DIM = 8
VECTORS_PER_TRIAL = 10
LEMMSEP_TOL = 1e-12
PNM_CAP = 0.1


class NormAxiomsSuite(PropertySuite):
    name = "norm-axioms"
    description = "coefficient norms: sandwich between l2 and 200/199 l2, pair term, homogeneity, triangle"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        N = random_coefficient_norm(NORM_DIM, rng, alpha=self.settings.alpha, delta=self.settings.delta)
        inputs = {"norm": N.model_dump()}
        out: List[Observation] = []
        for x, y in zip(rng.standard_normal((VECTORS_PER_TRIAL, NORM_DIM)),
                        rng.standard_normal((VECTORS_PER_TRIAL, NORM_DIM))):
            euclid = float(np.linalg.norm(x))
            value = norm_eval(N, x)
            t = float(rng.uniform(-3, 3))
            out.append(self.observe("lower-sandwich", euclid, value, inputs))
            out.append(self.observe("upper-sandwich", value, UPPER_CONSTANT * euclid, inputs))
            out.append(self.observe("homogeneity", abs(norm_eval(N, t * x) - abs(t) * value), 0, inputs))
            out.append(self.observe("triangle", norm_eval(N, x + y), value + norm_eval(N, y), inputs))
            out.append(self.observe("signed-cones", len(pnm_signed_membership(x, N)), 1, inputs))
        n, m = sorted(int(v) for v in rng.choice(NORM_DIM, size=2, replace=False))
        h = N.h[n, m]
        out.append(self.observe("pair-term", abs(norm_eval(N, e_nm(n, m, NORM_DIM)) - h), 0, inputs, tol=LEMMSEP_TOL))
        return out


class LemmsepSuite(PropertySuite):
    name = "lemmsep"
    description = "||e_nm -+ e_n'm'|| takes the values 1, sqrt2, sqrt3; the set {+-e_nm} stays 1-separated in ||.||_g"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        dim = int(rng.integers(3, NORM_DIM + 1))
        out: List[Observation] = []
        for entry in lemmsep_table(dim):
            out.append(self.observe(
                "euclidean-values", entry.deviation, 0,
                {"dim": dim, "first": list(entry.first), "second": list(entry.second)}, tol=LEMMSEP_TOL,
            ))
        g = CoefficientNormOracle(random_coefficient_norm(dim, rng, alpha=self.settings.alpha, delta=self.settings.delta))
        separation = min(min(e.minus, e.plus) for e in lemmsep_table(dim, g))
        out.append(self.observe("separated-in-g", 1, separation, {"dim": dim, "norm": g.to_document()}))
        return out


class PnmRadiusSuite(PropertySuite):
    name = "pnm-radius"
    description = "on the sphere, x in P_nm iff ||x - e_nm|| <= sqrt(2(h-1)/h), and members lie within 1/10"

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        dim = int(rng.integers(3, NORM_DIM + 1))
        N = random_coefficient_norm(dim, rng, alpha=self.settings.alpha, delta=self.settings.delta)
        pairs = list(itertools.combinations(range(dim), 2))
        out: List[Observation] = []
        for _ in range(VECTORS_PER_TRIAL):
            n, m = pairs[int(rng.integers(len(pairs)))]
            e = e_nm(n, m, dim)
            x = e + rng.uniform(0, PNM_CAP) * rng.standard_normal(dim)
            x = x / np.linalg.norm(x)
            gap = float(np.linalg.norm(x - e))
            member = pnm_member(x, n, m, N)
            inside = gap <= pnm_radius(N.h[n, m])
            inputs = {"norm": N.model_dump(), "x": x.tolist(), "n": n, "m": m}
            out.append(self.observe("radius-agreement", 0 if member == inside else 1, 0, inputs))
            if member:
                out.append(self.observe("member-within-tenth", gap, PNM_CAP, inputs))
        return out


class PermutationDistortionChainSuite(PropertySuite):
    name = "perm-distortion-chain"
    description = "optimal gh bijection of f, g in M_1/2^1 certifies rho_BM(||.||_f, ||.||_g) <= 4 delta gh"

    dim = 4

    def run_trial(self, rng: np.random.Generator, trial: int) -> List[Observation]:
        f = random_coefficient_norm(self.dim, rng, alpha=self.settings.alpha, delta=self.settings.delta)
        g = random_coefficient_norm(self.dim, rng, alpha=self.settings.alpha, delta=self.settings.delta)
        cert = gh_bijection(coefficient_metric(f), coefficient_metric(g))
        r = float(cert.value)
        result = permutation_distortion(f, g, cert.witness.perm, samples=self.settings.samples, seed=trial)
        inputs = {"f": f.model_dump(), "g": g.model_dump(), "perm": cert.witness.perm}
        return [
            self.observe("pointwise", 0 if result.pointwise_check else 1, 0, inputs),
            self.observe("gap-is-twice-gh", abs(result.max_pair_gap - 2 * r), 0, inputs),
            self.observe("bm-bound", result.bm_upper_bound, 4 * f.delta * r, inputs),
            self.observe("log-bound", result.bm_upper_bound, 2 * math.log1p(2 * f.delta * r), inputs),
        ]
