"""
Equilibrium and dominance analysis for normal-form games.

All comparisons use ``PAYOFF_TOLERANCE``: two utilities closer than that are
treated as equal. Solvers are exhaustive and refuse games above
``MAX_PROFILES`` pure profiles.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import MAX_PROFILES, PAYOFF_TOLERANCE
from app.core.errors import ErrorCode, GameTooLargeError, ValidationError
from app.models.game import (
    MixedProfile,
    MixedStrategy,
    NormalFormGame,
    StrategyProfile,
    restrict,
    validate_mixed_profile,
    validate_player,
    validate_profile,
    validate_strategy,
)

logger = logging.getLogger(__name__)


class DominanceMode(str, Enum):
    """Dominance criterion"""
    STRICT = "strict"
    WEAK = "weak"


@dataclass(frozen=True)
class EliminationStep:
    """One removal made by iterated elimination (indices refer to the input game)"""
    round: int
    player: int
    eliminated_strategy: int
    dominating_strategy: int
    mode: DominanceMode


@dataclass
class EliminationTrace:
    """Ordered record of iterated elimination steps"""
    steps: List[EliminationStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def rounds(self) -> int:
        return self.steps[-1].round if self.steps else 0

    def eliminated(self, player: int) -> FrozenSet[int]:
        return frozenset(step.eliminated_strategy for step in self.steps if step.player == player)


@dataclass
class EquilibriumReport:
    """Aggregated solution concepts for one game"""
    pure_equilibria: List[StrategyProfile]
    mixed_equilibria: List[MixedProfile]
    dominant_strategy_profile: Optional[StrategyProfile]
    pareto_optimal: List[StrategyProfile]
    notes: List[str] = field(default_factory=list)


DEGENERATE_2X2_NOTE = (
    "indifference equation has a zero denominator; "
    "no interior mixed equilibrium reported (continuum components are not enumerated)"
)


def _require_enumerable(game: NormalFormGame) -> None:
    if game.num_profiles > MAX_PROFILES:
        raise GameTooLargeError(
            f"Game has {game.num_profiles} pure profiles; the limit is {MAX_PROFILES}",
            details={"profiles": game.num_profiles, "limit": MAX_PROFILES}
        )


def _as_mode(mode) -> DominanceMode:
    try:
        return DominanceMode(mode)
    except ValueError:
        raise ValidationError(
            ErrorCode.INVALID_PARAMETER,
            f"Unknown dominance mode {mode!r}; use 'strict' or 'weak'"
        )


# Best responses and pure equilibria

def best_responses(game: NormalFormGame, player: int, others: Sequence[Optional[int]]) -> FrozenSet[int]:
    """
    All strategies of ``player`` within tolerance of the best utility
    against the fixed strategies of everyone else.

    Args:
        game: the game
        player: index of the responding player
        others: a full-length profile; the entry at ``player`` is ignored
            (``None`` is accepted there), every other entry must be set
    """
    player = validate_player(game, player)
    if len(others) != game.num_players:
        raise ValidationError(
            ErrorCode.INDEX_OUT_OF_BOUNDS,
            f"Partial profile has {len(others)} entries, game has {game.num_players} players"
        )

    key = []
    for opponent, strategy in enumerate(others):
        if opponent == player:
            key.append(slice(None))
        elif strategy is None:
            raise ValidationError(
                ErrorCode.INDEX_OUT_OF_BOUNDS,
                f"Strategy of player {game.players[opponent]!r} must be fixed"
            )
        else:
            key.append(validate_strategy(game, opponent, strategy))

    values = game.payoffs[tuple(key) + (player,)]
    return frozenset(int(s) for s in np.flatnonzero(values >= values.max() - PAYOFF_TOLERANCE))


def is_pure_nash(game: NormalFormGame, profile: Sequence[int]) -> bool:
    """No player gains more than the tolerance by a unilateral deviation"""
    profile = validate_profile(game, profile)
    return all(
        profile[player] in best_responses(game, player, profile)
        for player in range(game.num_players)
    )


def _best_response_mask(game: NormalFormGame) -> np.ndarray:
    mask = np.ones(game.shape, dtype=bool)
    for player in range(game.num_players):
        utilities = game.payoffs[..., player]
        best = utilities.max(axis=player, keepdims=True)
        mask &= utilities >= best - PAYOFF_TOLERANCE
    return mask


def enumerate_pure_nash(game: NormalFormGame) -> List[StrategyProfile]:
    """Every pure Nash equilibrium, in lexicographic profile order"""
    _require_enumerable(game)
    equilibria = [tuple(int(s) for s in row) for row in np.argwhere(_best_response_mask(game))]
    logger.debug(
        "Pure equilibria enumerated",
        extra={"extra_data": {"profiles": game.num_profiles, "equilibria": len(equilibria)}}
    )
    return equilibria


def unilateral_gains(game: NormalFormGame, profile: Sequence[int]) -> np.ndarray:
    """Per-player utility gain of the best pure deviation from ``profile`` (0 at equilibrium)"""
    profile = validate_profile(game, profile)
    gains = np.zeros(game.num_players)
    for player in range(game.num_players):
        key = profile[:player] + (slice(None),) + profile[player + 1:] + (player,)
        values = game.payoffs[key]
        gains[player] = max(0.0, float(values.max() - values[profile[player]]))
    return gains


# Dominance

def _margin(utilities: np.ndarray, player: int, a: int, b: int) -> np.ndarray:
    return np.take(utilities, a, axis=player) - np.take(utilities, b, axis=player)


def _dominates(utilities: np.ndarray, player: int, a: int, b: int, mode: DominanceMode) -> bool:
    margin = _margin(utilities, player, a, b)
    if mode is DominanceMode.STRICT:
        return bool(np.all(margin > PAYOFF_TOLERANCE))
    return bool(np.all(margin >= -PAYOFF_TOLERANCE) and np.any(margin > PAYOFF_TOLERANCE))


def _checked_pair(game: NormalFormGame, player: int, a: int, b: int) -> Tuple[int, int, int]:
    player = validate_player(game, player)
    a = validate_strategy(game, player, a)
    b = validate_strategy(game, player, b)
    if a == b:
        raise ValidationError(
            ErrorCode.SAME_STRATEGY,
            f"Cannot compare strategy {game.strategies[player][a]!r} with itself"
        )
    return player, a, b


def strictly_dominates(game: NormalFormGame, player: int, a: int, b: int) -> bool:
    """``a`` beats ``b`` by more than the tolerance against every opponent profile"""
    player, a, b = _checked_pair(game, player, a, b)
    return _dominates(game.payoffs[..., player], player, a, b, DominanceMode.STRICT)


def weakly_dominates(game: NormalFormGame, player: int, a: int, b: int) -> bool:
    """``a`` is never worse than ``b`` and strictly better against at least one opponent profile"""
    player, a, b = _checked_pair(game, player, a, b)
    return _dominates(game.payoffs[..., player], player, a, b, DominanceMode.WEAK)


def dominant_strategies(game: NormalFormGame, player: int, mode=DominanceMode.STRICT) -> FrozenSet[int]:
    """Strategies that dominate every other strategy of ``player``"""
    player = validate_player(game, player)
    mode = _as_mode(mode)
    utilities = game.payoffs[..., player]
    count = game.shape[player]
    return frozenset(
        a for a in range(count)
        if all(_dominates(utilities, player, a, b, mode) for b in range(count) if b != a)
    )


def dominant_strategy_equilibrium(game: NormalFormGame) -> Optional[StrategyProfile]:
    """The profile of strictly dominant strategies, if every player has one"""
    dominant = [dominant_strategies(game, player, DominanceMode.STRICT) for player in range(game.num_players)]
    if all(dominant):
        return tuple(min(strategies) for strategies in dominant)
    return None


def _dominator(
    game: NormalFormGame,
    survivors: Sequence[Sequence[int]],
    player: int,
    eliminated: int,
    mode: DominanceMode,
) -> Optional[int]:
    """Lowest surviving strategy that dominates ``eliminated`` inside the restricted game"""
    sub = game.payoffs[np.ix_(*survivors, range(game.num_players))][..., player]
    kept = survivors[player]
    b = kept.index(eliminated)
    for a, strategy in enumerate(kept):
        if a != b and _dominates(sub, player, a, b, mode):
            return strategy
    return None


def _first_dominated(
    game: NormalFormGame,
    survivors: Sequence[Sequence[int]],
    mode: DominanceMode,
) -> Optional[Tuple[int, int, int]]:
    for player in range(game.num_players):
        for strategy in survivors[player]:
            dominator = _dominator(game, survivors, player, strategy, mode)
            if dominator is not None:
                return player, strategy, dominator
    return None


def iesds(game: NormalFormGame, mode=DominanceMode.STRICT) -> Tuple[NormalFormGame, EliminationTrace]:
    """
    Iterated elimination of dominated strategies.

    The scan visits players low to high and their strategies low to high,
    removes the first dominated strategy found and starts over. A round
    begins from a snapshot of the reduced game; an elimination stays in the
    current round while the removed strategy was already dominated in that
    snapshot, otherwise it opens the next round.

    Returns:
        (reduced game, trace); trace indices refer to ``game``
    """
    mode = _as_mode(mode)
    _require_enumerable(game)

    survivors = [list(range(count)) for count in game.shape]
    snapshot = [list(kept) for kept in survivors]
    trace = EliminationTrace()
    current_round = 1

    while True:
        found = _first_dominated(game, survivors, mode)
        if found is None:
            break
        player, eliminated, dominator = found
        if _dominator(game, snapshot, player, eliminated, mode) is None:
            current_round += 1
            snapshot = [list(kept) for kept in survivors]
        trace.steps.append(EliminationStep(current_round, player, eliminated, dominator, mode))
        survivors[player].remove(eliminated)

    logger.debug(
        "Iterated elimination finished",
        extra={"extra_data": {"mode": mode.value, "steps": len(trace), "rounds": trace.rounds}}
    )
    return restrict(game, survivors), trace


# Pareto optimality

def enumerate_pareto_optimal(game: NormalFormGame) -> List[StrategyProfile]:
    """Profiles no other profile improves for someone without hurting anyone (lexicographic)

    Keeps a running frontier of mutually non-dominated profiles instead of
    comparing every pair.
    """
    _require_enumerable(game)
    flat = game.payoffs.reshape(-1, game.num_players)
    # A dominating row has a larger payoff sum, so it is usually visited first
    order = np.argsort(-flat.sum(axis=1), kind="stable")
    front = np.empty(len(order), dtype=np.intp)
    size = 0
    for index in order:
        if size:
            diff = flat[front[:size]] - flat[index]
            dominated = np.all(diff >= -PAYOFF_TOLERANCE, axis=1) & np.any(diff > PAYOFF_TOLERANCE, axis=1)
            if dominated.any():
                continue
            beaten = np.all(diff <= PAYOFF_TOLERANCE, axis=1) & np.any(diff < -PAYOFF_TOLERANCE, axis=1)
            if beaten.any():
                kept = front[:size][~beaten]
                size = len(kept)
                front[:size] = kept
        front[size] = index
        size += 1
    return [
        tuple(int(s) for s in np.unravel_index(flat_index, game.shape))
        for flat_index in np.sort(front[:size])
    ]


# Mixed strategies

def _pure_strategy_values(game: NormalFormGame, mixed: MixedProfile, player: int) -> np.ndarray:
    """Expected utility of each pure strategy of ``player`` against the others' mixtures"""
    values = game.payoffs[..., player]
    for opponent in reversed(range(game.num_players)):
        if opponent != player:
            values = np.tensordot(values, mixed[opponent].as_array(), axes=([opponent], [0]))
    return values


def expected_utilities(game: NormalFormGame, mixed: Sequence[MixedStrategy]) -> np.ndarray:
    mixed = validate_mixed_profile(game, mixed)
    return np.array([
        float(_pure_strategy_values(game, mixed, player) @ mixed[player].as_array())
        for player in range(game.num_players)
    ])


def epsilon_nash_check(game: NormalFormGame, mixed: Sequence[MixedStrategy], epsilon: float) -> bool:
    """True iff no player gains more than ``epsilon`` by switching to a pure strategy"""
    mixed = validate_mixed_profile(game, mixed)
    for player in range(game.num_players):
        values = _pure_strategy_values(game, mixed, player)
        if float(values.max() - values @ mixed[player].as_array()) > epsilon:
            return False
    return True


def _require_2x2(game: NormalFormGame) -> None:
    if game.shape != (2, 2):
        raise ValidationError(
            ErrorCode.NOT_TWO_BY_TWO,
            f"Closed-form mixed solver needs 2 players with 2 strategies each, got shape {game.shape}"
        )


def interior_2x2_equilibrium(game: NormalFormGame) -> Tuple[Optional[MixedProfile], Optional[str]]:
    """
    Fully mixed equilibrium of a 2x2 game from the two indifference equations.

    Returns:
        (profile or None, note) where note explains a degenerate game
    """
    _require_2x2(game)
    row = game.payoffs[..., 0]
    col = game.payoffs[..., 1]

    # Row's mix p makes the column player indifferent, column's mix q makes the row player indifferent.
    p_denominator = col[0, 0] - col[1, 0] - col[0, 1] + col[1, 1]
    q_denominator = row[0, 0] - row[0, 1] - row[1, 0] + row[1, 1]
    if abs(p_denominator) <= PAYOFF_TOLERANCE or abs(q_denominator) <= PAYOFF_TOLERANCE:
        logger.debug("Degenerate 2x2 game, interior equilibrium skipped")
        return None, DEGENERATE_2X2_NOTE

    p = float((col[1, 1] - col[1, 0]) / p_denominator)
    q = float((row[1, 1] - row[0, 1]) / q_denominator)
    inside = PAYOFF_TOLERANCE < p < 1 - PAYOFF_TOLERANCE and PAYOFF_TOLERANCE < q < 1 - PAYOFF_TOLERANCE
    if not inside:
        return None, None
    return (MixedStrategy((p, 1.0 - p)), MixedStrategy((q, 1.0 - q))), None


def solve_2x2_mixed(game: NormalFormGame) -> List[MixedProfile]:
    """Pure equilibria as point masses (lexicographic), then the interior equilibrium if any"""
    _require_2x2(game)
    equilibria: List[MixedProfile] = [
        tuple(MixedStrategy.point_mass(2, s) for s in profile)
        for profile in enumerate_pure_nash(game)
    ]
    interior, _ = interior_2x2_equilibrium(game)
    if interior is not None and epsilon_nash_check(game, interior, PAYOFF_TOLERANCE):
        equilibria.append(interior)
    return equilibria


def equilibrium_report(game: NormalFormGame) -> EquilibriumReport:
    """Pure and (for 2x2 games) mixed equilibria, dominant-strategy profile and Pareto set"""
    notes: List[str] = []
    mixed: List[MixedProfile] = []
    if game.shape == (2, 2):
        mixed = solve_2x2_mixed(game)
        _, note = interior_2x2_equilibrium(game)
        if note:
            notes.append(note)

    return EquilibriumReport(
        pure_equilibria=enumerate_pure_nash(game),
        mixed_equilibria=mixed,
        dominant_strategy_profile=dominant_strategy_equilibrium(game),
        pareto_optimal=enumerate_pareto_optimal(game),
        notes=notes,
    )
