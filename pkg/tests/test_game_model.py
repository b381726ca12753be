"""
Unit tests for game construction, lookup and scenario constructors
"""
import numpy as np
import pytest

from app.core.errors import ErrorCode, GameTooLargeError, ValidationError
from app.models.game import (
    MixedStrategy,
    Orientation,
    display_payoffs,
    exchange_game,
    new_game,
    parse_profile,
    payoff,
    pd_from_years,
    profile_labels,
    restrict,
    transform_payoffs,
)


class TestNewGame:
    """Test game construction and validation"""

    def test_minimize_entries_are_negated(self, pd_game):
        assert pd_game.orientation is Orientation.MINIMIZE
        assert list(payoff(pd_game, (0, 0))) == [-5.0, -5.0]

    def test_single_player_single_strategy(self):
        game = new_game(["Solo"], [["only"]], [0.0])
        assert game.num_profiles == 1
        assert list(payoff(game, (0,))) == [0.0]

    def test_row_major_layout(self):
        """Flat index is (((i0 * n1 + i1) * n2 + i2) * N) + player"""
        shape = (2, 3, 4)
        game = new_game(
            ["P0", "P1", "P2"],
            [[f"s{i}" for i in range(n)] for n in shape],
            np.arange(24 * 3),
        )
        for i in range(2):
            for j in range(3):
                for k in range(4):
                    for player in range(3):
                        expected = ((i * 3 + j) * 4 + k) * 3 + player
                        assert payoff(game, (i, j, k))[player] == expected

    def test_payoffs_are_read_only(self, pd_game):
        with pytest.raises(ValueError):
            pd_game.payoffs[0, 0, 0] = 1.0

    def test_wrong_entry_count(self):
        with pytest.raises(ValidationError) as exc_info:
            new_game(["A", "B"], [["x", "y"], ["x", "y"]], [0.0] * 7)
        assert exc_info.value.code == ErrorCode.SHAPE_MISMATCH

    def test_non_finite_entry(self):
        entries = [0.0] * 8
        entries[3] = float("nan")
        with pytest.raises(ValidationError) as exc_info:
            new_game(["A", "B"], [["x", "y"], ["x", "y"]], entries)
        assert exc_info.value.code == ErrorCode.NON_FINITE_PAYOFF
        assert exc_info.value.details["entry"] == 3

    def test_player_without_strategies(self):
        with pytest.raises(ValidationError) as exc_info:
            new_game(["A", "B"], [["x"], []], [])
        assert exc_info.value.code == ErrorCode.EMPTY_GAME

    def test_no_players(self):
        with pytest.raises(ValidationError) as exc_info:
            new_game([], [], [])
        assert exc_info.value.code == ErrorCode.EMPTY_GAME

    def test_duplicate_strategy_labels(self):
        with pytest.raises(ValidationError) as exc_info:
            new_game(["A"], [["x", "x"]], [0.0, 1.0])
        assert exc_info.value.code == ErrorCode.DUPLICATE_LABEL

    def test_unknown_orientation(self):
        with pytest.raises(ValidationError) as exc_info:
            new_game(["A"], [["x"]], [0.0], orientation="sideways")
        assert exc_info.value.code == ErrorCode.INVALID_PARAMETER

    def test_profile_cap(self):
        labels = [str(i) for i in range(1001)]
        with pytest.raises(GameTooLargeError) as exc_info:
            new_game(["A", "B"], [labels, labels], [])
        assert exc_info.value.exit_code == 3

    def test_equality_compares_payloads(self, pd_game):
        assert pd_game == pd_from_years()
        assert pd_game != pd_from_years(6, 1, 8, 2)


class TestLookups:
    """Test payoff lookup and profile conversion"""

    def test_prisoners_cell_in_years(self, prisoners_game):
        # Jane tells, Bob stays silent: Bob serves 8, Jane 1
        assert list(display_payoffs(prisoners_game, (0, 1))) == [1.0, 8.0]
        assert list(payoff(prisoners_game, (0, 1))) == [-1.0, -8.0]

    def test_both_silent(self, prisoners_game):
        assert list(display_payoffs(prisoners_game, (1, 1))) == [2.0, 2.0]

    def test_out_of_range_strategy(self, pd_game):
        with pytest.raises(ValidationError) as exc_info:
            payoff(pd_game, (0, 2))
        assert exc_info.value.code == ErrorCode.INDEX_OUT_OF_BOUNDS

    def test_wrong_profile_length(self, pd_game):
        with pytest.raises(ValidationError) as exc_info:
            payoff(pd_game, (0,))
        assert exc_info.value.code == ErrorCode.INDEX_OUT_OF_BOUNDS

    def test_parse_and_label_profiles(self, pd_game):
        assert parse_profile(pd_game, "DT, T") == (1, 0)
        assert parse_profile(pd_game, ["T", "DT"]) == (0, 1)
        assert profile_labels(pd_game, (1, 0)) == ("DT", "T")

    def test_parse_profile_unknown_label(self, pd_game):
        with pytest.raises(ValidationError) as exc_info:
            parse_profile(pd_game, "T,X")
        assert exc_info.value.code == ErrorCode.BAD_FLAG
        assert "Jane" in exc_info.value.message

    def test_parse_profile_wrong_count(self, pd_game):
        with pytest.raises(ValidationError) as exc_info:
            parse_profile(pd_game, "T")
        assert exc_info.value.code == ErrorCode.BAD_FLAG


class TestTransforms:
    """Test sub-games and affine payoff transforms"""

    def test_restrict_keeps_labels(self, staircase_game):
        sub = restrict(staircase_game, [[0, 2], [1]])
        assert sub.strategies == (("A", "C"), ("Y",))
        assert list(payoff(sub, (1, 0))) == [1.0, 1.0]

    def test_restrict_rejects_empty_player(self, staircase_game):
        with pytest.raises(ValidationError) as exc_info:
            restrict(staircase_game, [[0], []])
        assert exc_info.value.code == ErrorCode.EMPTY_GAME

    def test_transform_one_player(self, battle_of_sexes):
        moved = transform_payoffs(battle_of_sexes, 1, 2.0, -5.0)
        assert list(payoff(moved, (0, 0))) == [3.0, -1.0]
        assert list(payoff(battle_of_sexes, (0, 0))) == [3.0, 2.0]

    def test_transform_rejects_non_positive_scale(self, battle_of_sexes):
        with pytest.raises(ValidationError) as exc_info:
            transform_payoffs(battle_of_sexes, 0, 0.0, 1.0)
        assert exc_info.value.code == ErrorCode.INVALID_PARAMETER


class TestMixedStrategy:
    """Test probability vector validation"""

    def test_point_mass(self):
        strategy = MixedStrategy.point_mass(3, 1)
        assert strategy.probs == (0.0, 1.0, 0.0)
        assert strategy.support == (1,)

    def test_sum_within_tolerance(self):
        assert MixedStrategy((0.1, 0.2, 0.7)).probs == (0.1, 0.2, 0.7)

    @pytest.mark.parametrize("probs", [(0.5, 0.4), (1.5, -0.5), (float("nan"), 1.0), ()])
    def test_invalid_probabilities(self, probs):
        with pytest.raises(ValidationError) as exc_info:
            MixedStrategy(probs)
        assert exc_info.value.code == ErrorCode.INVALID_MIXED_PROFILE


class TestScenarioConstructors:
    """Test prisoner's dilemma and exchange game constructors"""

    def test_default_years(self, pd_game):
        assert pd_game.players == ("Bob", "Jane")
        assert pd_game.strategies == (("T", "DT"), ("T", "DT"))
        assert list(display_payoffs(pd_game, (0, 0))) == [5.0, 5.0]
        assert list(display_payoffs(pd_game, (0, 1))) == [1.0, 8.0]
        assert list(display_payoffs(pd_game, (1, 0))) == [8.0, 1.0]
        assert list(display_payoffs(pd_game, (1, 1))) == [2.0, 2.0]

    def test_matches_game_file_with_roles_swapped(self, pd_game, prisoners_game):
        swapped = np.transpose(pd_game.payoffs, (1, 0, 2))[..., ::-1]
        assert np.array_equal(swapped, prisoners_game.payoffs)

    def test_silence_not_better_than_betrayal(self):
        with pytest.raises(ValidationError) as exc_info:
            pd_from_years(both_tell=5, betrayer=1, sucker=8, both_silent=6)
        assert exc_info.value.code == ErrorCode.INVALID_ORDERING

    def test_exchange_payoffs(self):
        game = exchange_game(1, 2, 1, 2)
        assert game.players == ("A", "B")
        assert list(payoff(game, (0, 0))) == [2.0, 2.0]
        assert list(payoff(game, (0, 1))) == [0.0, 3.0]
        assert list(payoff(game, (1, 0))) == [3.0, 0.0]
        assert list(payoff(game, (1, 1))) == [1.0, 1.0]

    @pytest.mark.parametrize("values", [(2, 1, 1, 2), (0, 2, 1, 2), (1, 2, -1, 2)])
    def test_exchange_invalid_valuation(self, values):
        with pytest.raises(ValidationError) as exc_info:
            exchange_game(*values)
        assert exc_info.value.code == ErrorCode.INVALID_VALUATION
