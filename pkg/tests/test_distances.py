import math
from fractions import Fraction

import numpy as np
import pytest

from metriclab.domain.correspondence import Correspondence
from metriclab.domain.distances import (
    bijection_distortion,
    correspondence_through,
    distortion,
    gh_bijection,
    gh_brute_force,
    gh_exact,
    gh_lower_bound,
    hausdorff,
    hl_close,
    hl_upper_from_witness,
    hl_witnesses,
    lipschitz_constants,
    lipschitz_exact,
    max_separated_net,
    phi2,
    simeq,
)
from metriclab.domain.errors import (
    DimensionMismatch,
    EmptySubset,
    IndexOutOfRange,
    SizeLimitExceeded,
    SizeMismatch,
    WitnessInvalid,
)
from metriclab.domain.instances import RandomInstanceSpec, random_metric
from metriclab.domain.metric import validate_metric

from conftest import two_point


def _random(seed, n, lo=1, hi=3):
    return random_metric(RandomInstanceSpec(point_count=n, distance_range=(lo, hi), seed=seed, resolution=4))


class TestHausdorff:
    def test_line(self, line3):
        assert hausdorff(line3, [0], [1, 2]) == 3
        assert hausdorff(line3, [0, 1], [0, 1]) == 0

    def test_empty_subset(self, line3):
        with pytest.raises(EmptySubset):
            hausdorff(line3, [], [1])

    def test_out_of_range(self, line3):
        with pytest.raises(DimensionMismatch):
            hausdorff(line3, [0], [5])


class TestGromovHausdorff:
    def test_two_point_spaces(self, pair_1_3):
        M, N = pair_1_3
        cert = gh_exact(M, N)
        assert cert.value == Fraction(1)
        assert cert.exact
        R = cert.witness.to_correspondence()
        assert distortion(R, M, N) == 2

    def test_point_against_pair(self):
        point = validate_metric([[0]])
        assert gh_exact(point, two_point(2)).value == 1

    def test_identical_spaces(self, line3):
        assert gh_exact(line3, line3).value == 0

    @pytest.mark.parametrize("seed", range(6))
    def test_agrees_with_enumeration(self, seed):
        M = _random(seed, 3)
        N = _random(seed + 100, 3 + seed % 2)
        assert gh_exact(M, N).value == gh_brute_force(M, N)

    def test_lower_bound(self, pair_1_3):
        M, N = pair_1_3
        assert gh_lower_bound(M, N) <= gh_exact(M, N).value

    def test_hint_is_used_as_starting_bound(self, line3):
        cert = gh_exact(line3, line3, hint=Correspondence.identity(3))
        assert cert.value == 0

    def test_budget_marks_result_inexact(self):
        M, N = _random(1, 6), _random(2, 6)
        cert = gh_exact(M, N, budget=1)
        assert not cert.exact
        assert cert.value >= gh_exact(M, N).value

    def test_brute_force_limit(self):
        with pytest.raises(SizeLimitExceeded):
            gh_brute_force(_random(0, 5), _random(1, 4))

    def test_certificate_serializes_value_as_text(self, pair_1_3):
        dumped = gh_exact(*pair_1_3).model_dump(mode="json")
        assert dumped["value"] == "1"
        assert dumped["witness"]["kind"] == "correspondence"


class TestCorrespondenceThrough:
    def test_finds_a_close_relation_through_the_pair(self, line3):
        R = correspondence_through(line3, line3, (2, 2), Fraction(1, 2))
        assert R is not None
        assert (2, 2) in R.pairs()
        assert distortion(R, line3, line3) < Fraction(1, 2)

    def test_none_when_no_close_relation_contains_the_pair(self, line3):
        assert correspondence_through(line3, line3, (0, 1), Fraction(1, 2)) is None

    def test_agrees_with_gh(self, pair_1_3):
        M, N = pair_1_3
        for pair in [(0, 0), (0, 1), (1, 0)]:
            R = correspondence_through(M, N, pair, 3)
            assert R is not None and pair in R.pairs()
            assert distortion(R, M, N) == 2
        assert correspondence_through(M, N, (0, 0), 2) is None

    def test_pair_out_of_range(self, line3):
        with pytest.raises(IndexOutOfRange):
            correspondence_through(line3, line3, (0, 3), 1)


class TestBijections:
    def test_identity_distortion(self, line3):
        assert bijection_distortion(line3, line3, [0, 1, 2]) == 0
        assert bijection_distortion(line3, line3, [1, 0, 2]) == 1

    def test_gh_bijection_matches_gh_on_uniformly_discrete_spaces(self):
        M = validate_metric([[0, 5, 6], [5, 0, 7], [6, 7, 0]])
        N = validate_metric([[0, 6, 5], [6, 0, 7], [5, 7, 0]])
        assert gh_bijection(M, N).value == gh_exact(M, N).value == 0

    def test_gh_bijection_needs_equal_sizes(self, line3, pair_1_3):
        with pytest.raises(SizeMismatch):
            gh_bijection(line3, pair_1_3[0])

    def test_simeq(self, pair_1_3):
        M, N = pair_1_3
        assert simeq(M, N, [0, 1], 2)
        assert not simeq(M, N, [0, 1], Fraction(3, 2))


class TestLipschitz:
    def test_ratio_of_two_point_spaces(self):
        cert = lipschitz_exact(two_point(1), two_point(2))
        assert cert.value == pytest.approx(math.log(2))
        assert cert.details["ratio"] == "2"

    def test_unequal_sizes_are_infinitely_far(self, line3, pair_1_3):
        cert = lipschitz_exact(line3, pair_1_3[0])
        assert cert.value == math.inf
        assert cert.model_dump(mode="json")["value"] == "inf"

    def test_constants(self, line3):
        scaled = validate_metric((np.array(line3.rows()) * 2).tolist())
        assert lipschitz_constants(line3, scaled, [0, 1, 2]) == (2, 1)
        assert lipschitz_exact(line3, scaled).value == pytest.approx(math.log(2))


class TestHLCloseness:
    def test_identity_is_a_witness(self, line3):
        assert hl_witnesses(line3, line3, Fraction(1, 10), Correspondence.identity(3))

    def test_close_and_far(self, pair_1_3):
        M, N = pair_1_3
        assert not hl_close(M, N, Fraction(1, 10)).found
        found = hl_close(M, two_point(Fraction(21, 20)), Fraction(1, 10))
        assert found.found and found.complete
        assert found.regime == "exhaustive"

    def test_eps_must_be_positive(self, line3):
        with pytest.raises(ValueError):
            hl_close(line3, line3, 0)

    def test_budgeted_regime_above_the_cell_limit(self):
        M = _random(3, 5)
        result = hl_close(M, M, Fraction(1, 10))
        assert result.regime == "budgeted"
        assert result.found

    def test_net_chain_on_identical_spaces(self, line3):
        bound = hl_upper_from_witness(line3, line3, Fraction(1, 10), Correspondence.identity(3))
        assert bound.all_hold
        assert float(bound.value) == pytest.approx(phi2(0.1))
        assert bound.net == [0, 1, 2]

    def test_invalid_witness(self, pair_1_3):
        M, N = pair_1_3
        with pytest.raises(WitnessInvalid):
            hl_upper_from_witness(M, N, Fraction(1, 10), Correspondence.identity(2))

    def test_separated_net(self, line3):
        net = max_separated_net(line3, Fraction(3, 2), seed=0)
        assert all(line3.dist(i, j) >= Fraction(3, 2) for i in net for j in net if i != j)
        assert all(min(line3.dist(i, j) for j in net) < Fraction(3, 2) for i in range(3))
