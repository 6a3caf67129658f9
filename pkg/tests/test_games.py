from fractions import Fraction

import pytest

from metriclab.core.settings import Settings
from metriclab.domain.errors import DimensionMismatch, LengthMismatch, SizeLimit
from metriclab.domain.games import (
    GameSolver,
    cost_transitivity,
    duality_check,
    game_value,
    game_value_any_smaller,
    game_winner,
    partial_cost,
)
from metriclab.domain.metric import validate_metric
from metriclab.domain.services import GameService

from conftest import two_point


class TestPartialCost:
    def test_empty_tuples_cost_nothing(self, pair_1_3):
        assert partial_cost([], [], *pair_1_3) == 0

    def test_half_largest_gap(self, pair_1_3, line3):
        M, N = pair_1_3
        assert partial_cost([0, 1], [0, 1], M, N) == 1
        assert partial_cost([0, 1], [0, 0], M, N) == Fraction(1, 2)
        assert partial_cost([0, 2], [0, 1], line3, N) == 0

    def test_checks(self, pair_1_3):
        M, N = pair_1_3
        with pytest.raises(LengthMismatch):
            partial_cost([0], [0, 1], M, N)
        with pytest.raises(DimensionMismatch):
            partial_cost([5], [0], M, N)

    def test_transitivity(self, pair_1_3, line3):
        M, N = pair_1_3
        check = cost_transitivity(M, line3, N, [0, 1], [0, 2], [1, 0])
        assert check.holds
        assert check.composed <= check.first + check.second


class TestGameValues:
    def test_values_by_depth(self, pair_1_3):
        solver = GameSolver(*pair_1_3)
        assert [solver.value(depth=k) for k in range(5)] == [0, 0, 1, 1, 1]

    def test_equal_spaces_have_value_zero(self, line3):
        assert game_value(line3, line3, depth=3) == 0

    def test_value_from_a_position(self, pair_1_3):
        M, N = pair_1_3
        assert game_value(M, N, [0, 1], [0, 1], depth=0) == 1
        assert game_value(M, N, [0], [0], depth=1) == 1

    def test_any_smaller_rule_agrees(self, pair_1_3, line3):
        M, N = pair_1_3
        for depth in range(4):
            assert game_value_any_smaller(M, N, depth=depth) == game_value(M, N, depth=depth)
        assert game_value_any_smaller(line3, N, depth=2) == game_value(line3, N, depth=2)

    def test_negative_depth(self, pair_1_3):
        with pytest.raises(ValueError):
            game_value(*pair_1_3, depth=-1)

    def test_principal_variation_realises_the_value(self, pair_1_3):
        solver = GameSolver(*pair_1_3)
        line = solver.principal_variation(depth=3)
        assert len(line) == 3
        assert all(move.value == 1 for move in line)
        xs = [m.point if m.side == "M" else m.response for m in line]
        ys = [m.response if m.side == "M" else m.point for m in line]
        assert solver.value(xs, ys, depth=0) == 1

    def test_winner(self, pair_1_3):
        M, N = pair_1_3
        assert game_winner(M, N, Fraction(1, 2), depth=1)
        assert not game_winner(M, N, Fraction(1, 2), depth=2)
        with pytest.raises(ValueError):
            game_winner(M, N, 0, depth=1)

    def test_memo_is_monotone(self, pair_1_3):
        solver = GameSolver(*pair_1_3)
        solver.value(depth=4)
        assert solver.depth_monotonicity_violations() == []


class TestDuality:
    def test_stabilizes_at_gh(self, pair_1_3):
        report = duality_check(*pair_1_3)
        assert report.values == [0, 0, 1, 1, 1]
        assert report.stabilized_value == 1
        assert report.stabilization_depth == 2
        assert report.matches_gh and report.monotone

    def test_three_against_two(self, line3, pair_1_3):
        report = duality_check(line3, pair_1_3[1])
        assert report.matches_gh
        assert report.values == sorted(report.values)

    def test_size_limit(self):
        big = validate_metric([[0 if i == j else 1 for j in range(5)] for i in range(5)])
        with pytest.raises(SizeLimit):
            duality_check(big, big)

    def test_json_aliases(self, pair_1_3):
        dumped = duality_check(*pair_1_3).model_dump(mode="json", by_alias=True)
        assert dumped["matchesGH"] is True
        assert dumped["values"] == ["0", "0", "1", "1", "1"]


class TestGameService:
    def test_play(self, pair_1_3):
        result = GameService(Settings()).play(*pair_1_3, depth=2, eps="1/2")
        assert result.value == 1
        assert result.winner == "I"
        assert result.stable
        assert len(result.principal_variation) == 2

    def test_player_two_wins_short_games(self, pair_1_3):
        result = GameService(Settings()).play(*pair_1_3, depth=1, eps=Fraction(1, 2))
        assert result.winner == "II"
        assert result.stable is False
