"""
Unit tests for the arms-race model and best-response dynamics
"""
import pytest

from app.core.errors import ErrorCode, GameTooLargeError, ValidationError
from app.models.game import payoff
from app.services.analysis import dominant_strategies, is_pure_nash, unilateral_gains
from app.services.scenarios import (
    ARM,
    DISARM,
    ArmsRaceModel,
    arms_race_game,
    arms_race_report,
    best_response_dynamics,
    country_labels,
)


class TestArmsRaceModel:
    """Test model validation and pairwise payoffs"""

    def test_pair_payoffs(self):
        model = ArmsRaceModel(2, t=3, r=2, p=1, s=0)
        assert model.pair_payoff(ARM, ARM) == 1
        assert model.pair_payoff(ARM, DISARM) == 3
        assert model.pair_payoff(DISARM, ARM) == 0
        assert model.pair_payoff(DISARM, DISARM) == 2

    @pytest.mark.parametrize("params", [(1, 2, 3, 0), (3, 2, 2, 0), (3, 3, 1, 0), (3, 2, 1, float("inf"))])
    def test_ordering_violations(self, params):
        t, r, p, s = params
        with pytest.raises(ValidationError) as exc_info:
            ArmsRaceModel(2, t=t, r=r, p=p, s=s)
        assert exc_info.value.code == ErrorCode.INVALID_MODEL

    @pytest.mark.parametrize("countries", [1, 0, 2.5, True])
    def test_country_count(self, countries):
        with pytest.raises(ValidationError) as exc_info:
            ArmsRaceModel(countries, t=3, r=2, p=1, s=0)
        assert exc_info.value.code == ErrorCode.INVALID_MODEL

    def test_cooperation_temptation_grows_with_countries(self):
        gains = [ArmsRaceModel(n, t=3, r=2, p=1, s=0).cooperation_temptation() for n in (2, 3, 4)]
        assert gains == [1, 2, 3]


class TestArmsRaceGame:
    """Test the N-country game"""

    def test_two_countries(self):
        game = arms_race_game(ArmsRaceModel(2, t=3, r=2, p=1, s=0))
        assert game.players == ("A", "B")
        assert game.strategies == (("W", "NW"), ("W", "NW"))
        assert list(payoff(game, (ARM, ARM))) == [1.0, 1.0]
        assert list(payoff(game, (DISARM, DISARM))) == [2.0, 2.0]
        assert list(payoff(game, (ARM, DISARM))) == [3.0, 0.0]

    def test_three_countries_sum_pairwise(self):
        game = arms_race_game(ArmsRaceModel(3, t=3, r=2, p=1, s=0))
        assert list(payoff(game, (ARM, ARM, DISARM))) == [4.0, 4.0, 0.0]

    def test_weapons_dominate(self):
        game = arms_race_game(ArmsRaceModel(3, t=3, r=2, p=1, s=0))
        for country in range(3):
            assert dominant_strategies(game, country) == frozenset({ARM})

    def test_too_many_countries(self):
        with pytest.raises(GameTooLargeError):
            arms_race_game(ArmsRaceModel(20, t=3, r=2, p=1, s=0))

    def test_labels_past_the_alphabet(self):
        assert country_labels(3) == ["A", "B", "C"]
        assert country_labels(27)[-1] == "Country 27"

    @pytest.mark.parametrize("n, params", [(2, (3, 2, 1, 0)), (3, (3, 2, 1, 0)), (4, (10, 5, 2, 0))])
    def test_report(self, n, params):
        t, r, p, s = params
        report = arms_race_report(ArmsRaceModel(n, t=t, r=r, p=p, s=s))
        assert report.pure_equilibria == [(ARM,) * n]
        assert report.dominant_strategy_profile == (ARM,) * n
        assert (DISARM,) * n in report.pareto_optimal
        assert (ARM,) * n not in report.pareto_optimal

    def test_pull_away_from_disarmament(self):
        model = ArmsRaceModel(4, t=10, r=5, p=2, s=0)
        gains = unilateral_gains(arms_race_game(model), (DISARM,) * 4)
        assert list(gains) == [model.cooperation_temptation()] * 4


class TestBestResponseDynamics:
    """Test round-robin best-response dynamics"""

    def test_prisoners_from_silence(self, pd_game):
        trajectory = best_response_dynamics(pd_game, (1, 1), 100)
        assert trajectory.states == [(1, 1), (0, 1), (0, 0)]
        assert trajectory.converged
        assert trajectory.steps_taken == 4
        assert trajectory.final_state == (0, 0)

    def test_start_at_equilibrium(self, pd_game):
        trajectory = best_response_dynamics(pd_game, (0, 0), 100)
        assert trajectory.states == [(0, 0)]
        assert trajectory.converged
        assert trajectory.steps_taken == 2

    @pytest.mark.parametrize("start", [(0, 0), (0, 1), (1, 0), (1, 1)])
    def test_matching_pennies_cycles(self, matching_pennies, start):
        trajectory = best_response_dynamics(matching_pennies, start, 20)
        assert not trajectory.converged
        assert trajectory.steps_taken == 20

    def test_arms_race_from_full_disarmament(self):
        game = arms_race_game(ArmsRaceModel(3, t=3, r=2, p=1, s=0))
        trajectory = best_response_dynamics(game, (DISARM,) * 3, 100)
        assert trajectory.states == [(1, 1, 1), (0, 1, 1), (0, 0, 1), (0, 0, 0)]
        assert trajectory.converged
        assert is_pure_nash(game, trajectory.final_state)

    def test_step_limit(self, pd_game):
        trajectory = best_response_dynamics(pd_game, (1, 1), 1)
        assert trajectory.states == [(1, 1), (0, 1)]
        assert not trajectory.converged
        assert trajectory.steps_taken == 1

    def test_invalid_arguments(self, pd_game):
        with pytest.raises(ValidationError) as exc_info:
            best_response_dynamics(pd_game, (1, 1), 0)
        assert exc_info.value.code == ErrorCode.INVALID_PARAMETER

        with pytest.raises(ValidationError) as exc_info:
            best_response_dynamics(pd_game, (1, 2), 10)
        assert exc_info.value.code == ErrorCode.INDEX_OUT_OF_BOUNDS
