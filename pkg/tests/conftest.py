"""
Test configuration and fixtures
"""
import pytest

from app.models.game import NormalFormGame, new_game, pd_from_years
from app.services.game_io import parse_game


# Prisoner's dilemma in years, Jane as player 0 (rows), cells ordered (Jane, Bob)
PRISONERS_JSON = (
    '{"players":["Jane","Bob"],"strategies":[["T","DT"],["T","DT"]],'
    '"orientation":"minimize","payoffs":[[[5,5],[1,8]],[[8,1],[2,2]]]}'
)

MATCHING_PENNIES_JSON = (
    '{"players":["Row","Column"],"strategies":[["Heads","Tails"],["Heads","Tails"]],'
    '"orientation":"maximize","payoffs":[[[1,-1],[-1,1]],[[-1,1],[1,-1]]]}'
)

# Row's B and C only become dominated once Column drops X
STAIRCASE_JSON = (
    '{"players":["Row","Column"],"strategies":[["A","B","C"],["X","Y"]],'
    '"orientation":"maximize","payoffs":[[[0,0],[3,1]],[[1,0],[2,1]],[[3,0],[1,1]]]}'
)


@pytest.fixture
def pd_game() -> NormalFormGame:
    """Default prisoner's dilemma built from years (Bob is player 0)"""
    return pd_from_years()


@pytest.fixture
def prisoners_game() -> NormalFormGame:
    """Prisoner's dilemma parsed from the game file (Jane is player 0)"""
    return parse_game(PRISONERS_JSON)


@pytest.fixture
def matching_pennies() -> NormalFormGame:
    return parse_game(MATCHING_PENNIES_JSON)


@pytest.fixture
def battle_of_sexes() -> NormalFormGame:
    return new_game(
        ["Row", "Column"],
        [["Opera", "Football"], ["Opera", "Football"]],
        [3, 2, 0, 0, 0, 0, 2, 3],
    )


@pytest.fixture
def staircase_game() -> NormalFormGame:
    return parse_game(STAIRCASE_JSON)


@pytest.fixture
def game_files(tmp_path):
    """Game files on disk, keyed by name"""
    files = {}
    for name, text in (
        ("prisoners", PRISONERS_JSON),
        ("pennies", MATCHING_PENNIES_JSON),
        ("staircase", STAIRCASE_JSON),
        ("missing_payoffs", '{"players":["A"],"strategies":[["x"]],"orientation":"maximize"}'),
        ("broken", '{"players": ["A"],\n  "strategies": [["x"]]\n  "orientation": "maximize"}'),
    ):
        path = tmp_path / f"{name}.json"
        path.write_text(text, encoding="utf-8")
        files[name] = path
    return files
