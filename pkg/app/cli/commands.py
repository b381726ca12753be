"""
Command implementations behind the game solver command line.

Each ``cmd_*`` function takes already-parsed flag values, runs the solvers and
returns a ``CliReport`` (``cmd_export`` returns the game file text instead).
Payoffs in reports are always shown in the game's source orientation.
"""
import logging
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from app.core.config import (
    DEFAULT_ARMS_RACE_PAYOFFS,
    DEFAULT_COUNTRIES,
    DEFAULT_MAX_STEPS,
    DEFAULT_PD_YEARS,
)
from app.core.errors import ErrorCode, ValidationError
from app.core.logging import log_performance
from app.models.game import (
    MixedProfile,
    NormalFormGame,
    StrategyProfile,
    display_payoffs,
    exchange_game,
    parse_profile,
    pd_from_years,
    profile_labels,
    to_source_orientation,
)
from app.models.schemas import (
    CliReport,
    DominanceRelation,
    EliminationStepView,
    EquilibriumView,
    MixedProfileView,
    MixedStrategyView,
    PlayerDominance,
    ProfileView,
    TrajectoryView,
)
from app.services.analysis import (
    DominanceMode,
    EquilibriumReport,
    dominant_strategies,
    equilibrium_report,
    enumerate_pareto_optimal,
    expected_utilities,
    iesds,
    strictly_dominates,
    unilateral_gains,
    weakly_dominates,
)
from app.services.game_io import dump_game, game_to_document, load_game
from app.services.scenarios import (
    ARM,
    DISARM,
    ArmsRaceModel,
    DynamicsTrajectory,
    arms_race_game,
    best_response_dynamics,
)
from app.cli.rendering import format_number, json_number

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


# Flag parsing

def parse_number_list(text: Union[str, Sequence[float]], count: int, flag: str) -> Tuple[float, ...]:
    """Parse ``"3,2,1,0"`` into exactly ``count`` floats"""
    if isinstance(text, str):
        parts = [part.strip() for part in text.split(",")]
        try:
            numbers = tuple(float(part) for part in parts)
        except ValueError:
            raise ValidationError(
                ErrorCode.BAD_FLAG,
                f"{flag} expects {count} comma-separated numbers, got {text!r}"
            )
    else:
        numbers = tuple(float(v) for v in text)
    if len(numbers) != count:
        raise ValidationError(
            ErrorCode.BAD_FLAG,
            f"{flag} expects {count} comma-separated numbers, got {len(numbers)}"
        )
    return numbers


# Report views

def _profile_view(game: NormalFormGame, profile: StrategyProfile) -> ProfileView:
    return ProfileView(
        profile=list(profile_labels(game, profile)),
        payoffs=[json_number(v) for v in display_payoffs(game, profile)],
    )


def _mixed_view(game: NormalFormGame, mixed: MixedProfile) -> MixedProfileView:
    expected = to_source_orientation(game, expected_utilities(game, mixed))
    return MixedProfileView(
        strategies=[
            MixedStrategyView(
                player=game.players[player],
                probabilities={
                    label: json_number(p) for label, p in zip(game.strategies[player], strategy.probs)
                },
            )
            for player, strategy in enumerate(mixed)
        ],
        expected_payoffs=[json_number(v) for v in expected],
    )


def _equilibrium_view(game: NormalFormGame, report: EquilibriumReport) -> EquilibriumView:
    return EquilibriumView(
        pure_equilibria=[_profile_view(game, p) for p in report.pure_equilibria],
        mixed_equilibria=(
            [_mixed_view(game, m) for m in report.mixed_equilibria] if game.shape == (2, 2) else None
        ),
        dominant_strategy_profile=(
            _profile_view(game, report.dominant_strategy_profile)
            if report.dominant_strategy_profile is not None else None
        ),
        pareto_optimal=[_profile_view(game, p) for p in report.pareto_optimal],
        notes=list(report.notes),
    )


def _trajectory_view(game: NormalFormGame, trajectory: DynamicsTrajectory) -> TrajectoryView:
    return TrajectoryView(
        states=[list(profile_labels(game, state)) for state in trajectory.states],
        converged=trajectory.converged,
        steps_taken=trajectory.steps_taken,
    )


def _game_inputs(path: PathLike, game: NormalFormGame) -> Dict[str, Any]:
    return {
        "game_file": str(path),
        "players": list(game.players),
        "strategies": [list(labels) for labels in game.strategies],
        "orientation": game.orientation.value,
    }


def _timed(operation: str, func, *args):
    started = time.perf_counter()
    result = func(*args)
    log_performance(operation, time.perf_counter() - started)
    return result


# Commands

def cmd_solve(path: PathLike) -> CliReport:
    """Pure/mixed equilibria, dominant-strategy profile and Pareto set of a game file"""
    game = load_game(path)
    report = _timed("solve", equilibrium_report, game)
    return CliReport(
        command="solve",
        inputs=_game_inputs(path, game),
        orientation=game.orientation,
        equilibria=_equilibrium_view(game, report),
    )


def cmd_pareto(path: PathLike) -> CliReport:
    game = load_game(path)
    optimal = _timed("pareto", enumerate_pareto_optimal, game)
    return CliReport(
        command="pareto",
        inputs=_game_inputs(path, game),
        orientation=game.orientation,
        pareto_optimal=[_profile_view(game, p) for p in optimal],
    )


def _player_dominance(game: NormalFormGame, player: int) -> PlayerDominance:
    labels = game.strategies[player]
    relations: List[DominanceRelation] = []
    for a in range(len(labels)):
        for b in range(len(labels)):
            if a == b:
                continue
            if strictly_dominates(game, player, a, b):
                mode = DominanceMode.STRICT
            elif weakly_dominates(game, player, a, b):
                mode = DominanceMode.WEAK
            else:
                continue
            relations.append(DominanceRelation(
                player=game.players[player], dominant=labels[a], dominated=labels[b], mode=mode.value
            ))
    return PlayerDominance(
        player=game.players[player],
        relations=relations,
        strictly_dominant=[labels[s] for s in sorted(dominant_strategies(game, player, DominanceMode.STRICT))],
        weakly_dominant=[labels[s] for s in sorted(dominant_strategies(game, player, DominanceMode.WEAK))],
    )


def cmd_dominance(path: PathLike) -> CliReport:
    """Pairwise dominance relations and dominant strategies per player"""
    game = load_game(path)
    started = time.perf_counter()
    dominance = [_player_dominance(game, player) for player in range(game.num_players)]
    log_performance("dominance", time.perf_counter() - started)
    return CliReport(
        command="dominance",
        inputs=_game_inputs(path, game),
        orientation=game.orientation,
        dominance=dominance,
    )


def cmd_iesds(path: PathLike, mode: Union[str, DominanceMode] = DominanceMode.STRICT) -> CliReport:
    """Iterated elimination trace and the reduced game"""
    game = load_game(path)
    reduced, trace = _timed("iesds", iesds, game, mode)
    inputs = _game_inputs(path, game)
    inputs["mode"] = DominanceMode(mode).value
    return CliReport(
        command="iesds",
        inputs=inputs,
        orientation=game.orientation,
        elimination=[
            EliminationStepView(
                round=step.round,
                player=game.players[step.player],
                eliminated=game.strategies[step.player][step.eliminated_strategy],
                dominator=game.strategies[step.player][step.dominating_strategy],
                mode=step.mode.value,
            )
            for step in trace.steps
        ],
        reduced_game=game_to_document(reduced),
    )


def cmd_dynamics(path: PathLike, start: Union[str, Sequence[str]], max_steps: int = DEFAULT_MAX_STEPS) -> CliReport:
    """Round-robin best-response dynamics on a game file from a labelled start profile"""
    game = load_game(path)
    start_profile = parse_profile(game, start)
    trajectory = _timed("dynamics", best_response_dynamics, game, start_profile, max_steps)
    inputs = _game_inputs(path, game)
    inputs["start"] = list(profile_labels(game, start_profile))
    inputs["max_steps"] = max_steps
    return CliReport(
        command="dynamics",
        inputs=inputs,
        orientation=game.orientation,
        trajectory=_trajectory_view(game, trajectory),
    )


def _arms_race_notes(game: NormalFormGame, report: EquilibriumReport) -> List[str]:
    disarmed = (DISARM,) * game.num_players
    armed = (ARM,) * game.num_players
    notes = []
    if disarmed in report.pareto_optimal and disarmed not in report.pure_equilibria:
        gain = unilateral_gains(game, disarmed).max()
        notes.append(
            f"{', '.join(profile_labels(game, disarmed))} is Pareto-optimal but not an equilibrium: "
            f"a country that resumes building weapons gains {format_number(gain)}"
        )
    if report.pure_equilibria == [armed]:
        notes.append(f"{', '.join(profile_labels(game, armed))} is the unique pure equilibrium")
    return notes


def cmd_arms_race(
    countries: int = DEFAULT_COUNTRIES,
    payoffs: Union[str, Sequence[float]] = DEFAULT_ARMS_RACE_PAYOFFS,
    dynamics_start: Optional[Union[str, Sequence[str]]] = None,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> CliReport:
    """Arms-race equilibrium report, optionally with best-response dynamics"""
    t, r, p, s = parse_number_list(payoffs, 4, "--payoffs")
    model = ArmsRaceModel(n_countries=countries, t=t, r=r, p=p, s=s)
    game = arms_race_game(model)
    report = _timed("arms_race", equilibrium_report, game)

    inputs: Dict[str, Any] = {
        "countries": countries,
        "payoffs": {"t": json_number(t), "r": json_number(r), "p": json_number(p), "s": json_number(s)},
    }
    trajectory_view = None
    if dynamics_start is not None:
        start_profile = parse_profile(game, dynamics_start)
        trajectory = best_response_dynamics(game, start_profile, max_steps)
        trajectory_view = _trajectory_view(game, trajectory)
        inputs["start"] = list(profile_labels(game, start_profile))
        inputs["max_steps"] = max_steps

    logger.info(
        "Arms race analysed",
        extra={"command": "arms-race", "extra_data": {"countries": countries}}
    )
    return CliReport(
        command="arms-race",
        inputs=inputs,
        orientation=game.orientation,
        equilibria=_equilibrium_view(game, report),
        trajectory=trajectory_view,
        notes=_arms_race_notes(game, report),
    )


EXPORT_SCENARIOS = ("pd", "exchange", "arms-race")


def cmd_export(
    scenario: str,
    years: Union[str, Sequence[float]] = DEFAULT_PD_YEARS,
    values: Optional[Union[str, Sequence[float]]] = None,
    countries: int = DEFAULT_COUNTRIES,
    payoffs: Union[str, Sequence[float]] = DEFAULT_ARMS_RACE_PAYOFFS,
) -> str:
    """Game file text for one of the built-in scenarios"""
    if scenario == "pd":
        game = pd_from_years(*parse_number_list(years, 4, "--years"))
    elif scenario == "exchange":
        if values is None:
            raise ValidationError(ErrorCode.BAD_FLAG, "exchange needs --values v_own_a,v_other_a,v_own_b,v_other_b")
        game = exchange_game(*parse_number_list(values, 4, "--values"))
    elif scenario == "arms-race":
        t, r, p, s = parse_number_list(payoffs, 4, "--payoffs")
        game = arms_race_game(ArmsRaceModel(n_countries=countries, t=t, r=r, p=p, s=s))
    else:
        raise ValidationError(
            ErrorCode.BAD_FLAG,
            f"Unknown scenario {scenario!r}; choose from {', '.join(EXPORT_SCENARIOS)}"
        )
    return dump_game(game) + "\n"
