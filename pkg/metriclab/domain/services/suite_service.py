from __future__ import annotations
import logging
import time
from typing import List

import numpy as np

from metriclab.core.settings import Settings
from metriclab.domain.abstractions.suite import TrialInconclusive
from metriclab.domain.schemas.suites import Failure, SuiteInfo, SuiteReport
from metriclab.domain.suites import suite_registry

logger = logging.getLogger(__name__)


class SuiteService:
    def __init__(self, settings: Settings):
        self.settings = settings

    def available(self) -> List[SuiteInfo]:
        return [
            SuiteInfo(name=name, description=suite_registry.get(name).description)
            for name in suite_registry.names()
        ]

    def run(self, name: str, trials: int, seed: int = 0) -> SuiteReport:
        """Ejecuta la suite; el ensayo i usa la semilla seed XOR i."""
        suite = suite_registry.get(name)(self.settings)
        failures: List[Failure] = []
        worst = None
        checks = 0
        inconclusive = 0
        started = time.perf_counter()
        for trial in range(trials):
            rng = np.random.default_rng(seed ^ trial)
            try:
                observations = suite.run_trial(rng, trial)
            except TrialInconclusive as exc:
                logger.debug("%s trial %d inconclusive: %s", name, trial, exc)
                inconclusive += 1
                continue
            for obs in observations:
                checks += 1
                worst = obs.margin if worst is None else min(worst, obs.margin)
                if not obs.holds:
                    failures.append(Failure(
                        trial=trial,
                        check=obs.check,
                        inputs=obs.inputs,
                        observed=obs.observed,
                        bound=obs.bound,
                        margin=obs.margin,
                    ))
        elapsed = time.perf_counter() - started
        logger.info("suite %s: %d trials, %d checks, %d failures, %d inconclusive",
                    name, trials, checks, len(failures), inconclusive)
        return SuiteReport(
            suite=name,
            trials=trials,
            seed=seed,
            failures=failures,
            worst_margin=worst,
            checks=checks,
            inconclusive=inconclusive,
            elapsed=round(elapsed, 6),
        )
