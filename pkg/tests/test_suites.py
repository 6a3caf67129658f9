from fractions import Fraction

import numpy as np
import pytest

from metriclab.core.settings import Settings
from metriclab.domain.abstractions.suite import PropertySuite, TrialInconclusive
from metriclab.domain.errors import UnknownSuite
from metriclab.domain.metric import validate_metric
from metriclab.domain.schemas.suites import Observation
from metriclab.domain.services import SuiteService
from metriclab.domain.suites import SuiteRegistry, suite_registry
from metriclab.domain.suites import reduction_suites
from metriclab.domain.suites.reduction_suites import BoundBackwardSuite, LevelPreservationSuite

from conftest import two_point

ALL_SUITES = [
    "gh-oracle",
    "gh-triangle",
    "m5-m3-forward",
    "m5-m3-backward",
    "separate-bounds",
    "lip-gh-class",
    "level-preservation",
    "norm-axioms",
    "lemmsep",
    "pnm-radius",
    "perm-distortion-chain",
    "game-duality",
    "hl-phi2",
]


@pytest.fixture
def service():
    return SuiteService(Settings())


def test_registry_names():
    assert suite_registry.names() == ALL_SUITES


def test_unknown_suite_lists_the_available_ones():
    with pytest.raises(UnknownSuite) as info:
        suite_registry.get("nope")
    assert "lemmsep" in str(info.value)


@pytest.mark.parametrize(
    "name, trials",
    [
        ("lemmsep", 3),
        ("norm-axioms", 3),
        ("pnm-radius", 3),
        ("perm-distortion-chain", 3),
        ("gh-oracle", 3),
        ("gh-triangle", 3),
        ("separate-bounds", 3),
        ("game-duality", 2),
    ],
)
def test_suite_passes(service, name, trials):
    report = service.run(name, trials, seed=7)
    assert report.passed, report.failures[:1]
    assert report.checks > 0
    assert report.trials == trials


@pytest.mark.parametrize(
    "name",
    ["m5-m3-forward", "m5-m3-backward", "lip-gh-class", "level-preservation", "hl-phi2"],
)
def test_reduction_suites_pass(service, name):
    report = service.run(name, 10, seed=1)
    assert report.passed, report.failures[:1]
    assert report.checks > 0


def test_reports_are_reproducible(service):
    first = service.run("norm-axioms", 2, seed=42)
    second = service.run("norm-axioms", 2, seed=42)
    assert first.model_dump(exclude={"elapsed"}) == second.model_dump(exclude={"elapsed"})


class _AlwaysFails(PropertySuite):
    name = "always-fails"
    description = "observed exceeds bound on every trial"

    def run_trial(self, rng: np.random.Generator, trial: int):
        self.require(trial != 1, "skip the second trial")
        return [self.observe("too-big", 2, 1, {"trial": trial})]


def test_failures_and_inconclusive_trials_are_counted(monkeypatch, service):
    registry = SuiteRegistry()
    registry.register(_AlwaysFails)
    monkeypatch.setattr("metriclab.domain.services.suite_service.suite_registry", registry)
    report = service.run("always-fails", 3, seed=0)
    assert not report.passed
    assert [f.trial for f in report.failures] == [0, 2]
    assert report.inconclusive == 1
    assert report.worst_margin == -1
    assert report.model_dump(by_alias=True)["worstMargin"] == -1


def test_observe_margin():
    obs: Observation = PropertySuite.observe("c", 1, 3, {})
    assert obs.margin == 2 and obs.holds
    with pytest.raises(TrialInconclusive):
        PropertySuite.require(False, "no")


def test_available_describes_each_suite(service):
    infos = service.available()
    assert [i.name for i in infos] == ALL_SUITES
    assert all(i.description for i in infos)


class TestReductionSuiteTrials:
    M = validate_metric([
        [0, Fraction(45, 8), Fraction(23, 4)],
        [Fraction(45, 8), 0, Fraction(23, 4)],
        [Fraction(23, 4), Fraction(23, 4), 0],
    ])

    def _same_pair(self, monkeypatch, space):
        monkeypatch.setattr(reduction_suites, "perturbed_pair", lambda *args, **kwargs: (space, space))

    def test_backward_holds_on_identical_inputs(self, monkeypatch):
        self._same_pair(monkeypatch, self.M)
        observations = BoundBackwardSuite(Settings()).run_trial(np.random.default_rng(0), 0)
        assert {o.check for o in observations} == {"pi-bijective", "backward-bound", "pullback-bound"}
        assert all(o.holds for o in observations)

    def test_levels_hold_on_identical_inputs(self, monkeypatch):
        self._same_pair(monkeypatch, two_point(Fraction(3, 2)))
        observations = LevelPreservationSuite(Settings()).run_trial(np.random.default_rng(0), 0)
        checks = {o.check: o for o in observations}
        assert checks["levels-preserved"].observed == 0
        assert "level-0-restriction" in checks
        assert all(o.holds for o in observations)

    @pytest.mark.parametrize("suite", [BoundBackwardSuite, LevelPreservationSuite])
    def test_unfinished_gadget_search_is_inconclusive(self, monkeypatch, suite):
        real = reduction_suites.gh_exact

        def unfinished(*args, **kwargs):
            return real(*args, **kwargs).model_copy(update={"exact": False})

        monkeypatch.setattr(reduction_suites, "gh_exact", unfinished)
        with pytest.raises(TrialInconclusive, match="budget"):
            suite(Settings()).run_trial(np.random.default_rng(3), 0)

    def test_tiny_budget_reports_no_false_failures(self):
        report = SuiteService(Settings(budget=1)).run("m5-m3-backward", 4, seed=1)
        assert report.passed
        assert report.inconclusive == report.trials
