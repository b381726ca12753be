"""
Normal-form game representation, validation and scenario constructors.

Payoffs are stored as a read-only numpy tensor of shape
``(n_0, n_1, ..., n_{N-1}, N)``: one axis per player in player order, the last
axis holding the per-player payoff vector. Flattening it in C order gives the
documented row-major layout::

    flat index = (((i0 * n1 + i1) * n2 + ...) * N) + player

Internally every payoff is a utility (higher is better). Games given as costs
(``minimize``) are negated once at construction and remember their source
orientation so they can be displayed as the original numbers.
"""
import itertools
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Sequence, Tuple, Union

import numpy as np

from app.core.config import MAX_PROFILES, PROBABILITY_TOLERANCE
from app.core.errors import ErrorCode, GameTooLargeError, ValidationError

logger = logging.getLogger(__name__)


StrategyProfile = Tuple[int, ...]


class Orientation(str, Enum):
    """How the source payoff numbers are meant to be read"""
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


@dataclass(frozen=True, eq=False)
class NormalFormGame:
    """Finite N-player game in strategic form (immutable)."""
    players: Tuple[str, ...]
    strategies: Tuple[Tuple[str, ...], ...]
    payoffs: np.ndarray
    orientation: Orientation = Orientation.MAXIMIZE

    @property
    def num_players(self) -> int:
        return len(self.players)

    @property
    def shape(self) -> Tuple[int, ...]:
        """Strategy count per player"""
        return tuple(len(labels) for labels in self.strategies)

    @property
    def num_profiles(self) -> int:
        return math.prod(self.shape)

    def profiles(self) -> Iterator[StrategyProfile]:
        """All pure profiles in lexicographic order"""
        return itertools.product(*(range(n) for n in self.shape))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalFormGame):
            return NotImplemented
        return (
            self.players == other.players
            and self.strategies == other.strategies
            and self.orientation == other.orientation
            and np.array_equal(self.payoffs, other.payoffs)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"NormalFormGame(players={self.players!r}, strategies={self.strategies!r}, "
            f"orientation={self.orientation.value!r})"
        )


@dataclass(frozen=True)
class MixedStrategy:
    """Probability distribution over one player's pure strategies"""
    probs: Tuple[float, ...]

    def __post_init__(self):
        probs = tuple(float(p) for p in self.probs)
        object.__setattr__(self, "probs", probs)
        if not probs:
            raise ValidationError(ErrorCode.INVALID_MIXED_PROFILE, "Mixed strategy has no entries")
        if any(not math.isfinite(p) or p < 0 for p in probs):
            raise ValidationError(
                ErrorCode.INVALID_MIXED_PROFILE,
                "Mixed strategy probabilities must be finite and non-negative",
                details={"probs": list(probs)}
            )
        if abs(math.fsum(probs) - 1.0) > PROBABILITY_TOLERANCE:
            raise ValidationError(
                ErrorCode.INVALID_MIXED_PROFILE,
                "Mixed strategy probabilities must sum to 1",
                details={"sum": math.fsum(probs)}
            )

    @classmethod
    def point_mass(cls, size: int, index: int) -> "MixedStrategy":
        probs = [0.0] * size
        probs[index] = 1.0
        return cls(tuple(probs))

    @property
    def support(self) -> Tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.probs) if p > 0)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probs, dtype=np.float64)


MixedProfile = Tuple[MixedStrategy, ...]


def _check_profile_count(shape: Sequence[int]) -> None:
    count = math.prod(shape)
    if count > MAX_PROFILES:
        raise GameTooLargeError(
            f"Game has {count} pure profiles; the limit is {MAX_PROFILES}",
            details={"profiles": count, "limit": MAX_PROFILES}
        )


def _check_labels(player_labels: Sequence[str], strategy_labels: Sequence[Sequence[str]]) -> None:
    if len(player_labels) == 0:
        raise ValidationError(ErrorCode.EMPTY_GAME, "A game needs at least one player")
    if len(strategy_labels) != len(player_labels):
        raise ValidationError(
            ErrorCode.SHAPE_MISMATCH,
            f"Got strategy lists for {len(strategy_labels)} players, expected {len(player_labels)}",
            details={"players": len(player_labels), "strategy_lists": len(strategy_labels)}
        )
    if len(set(player_labels)) != len(player_labels):
        raise ValidationError(ErrorCode.DUPLICATE_LABEL, "Player labels must be unique")
    for player, labels in zip(player_labels, strategy_labels):
        if len(labels) == 0:
            raise ValidationError(
                ErrorCode.EMPTY_GAME,
                f"Player {player!r} has no strategies",
                details={"player": player}
            )
        if len(set(labels)) != len(labels):
            raise ValidationError(
                ErrorCode.DUPLICATE_LABEL,
                f"Strategy labels of player {player!r} must be unique",
                details={"player": player}
            )


def _build(
    players: Sequence[str],
    strategies: Sequence[Sequence[str]],
    utilities: np.ndarray,
    orientation: Orientation,
) -> NormalFormGame:
    payoffs = np.array(utilities, dtype=np.float64, copy=True)
    payoffs.setflags(write=False)
    return NormalFormGame(
        players=tuple(str(p) for p in players),
        strategies=tuple(tuple(str(s) for s in labels) for labels in strategies),
        payoffs=payoffs,
        orientation=orientation,
    )


def new_game(
    player_labels: Sequence[str],
    strategy_labels: Sequence[Sequence[str]],
    payoff_entries: Union[Sequence[float], np.ndarray],
    orientation: Union[Orientation, str] = Orientation.MAXIMIZE,
) -> NormalFormGame:
    """
    Build a validated game from a flat row-major list of payoff entries.

    Args:
        player_labels: one label per player
        strategy_labels: per-player strategy labels, unique within a player
        payoff_entries: (product of strategy counts) x (player count) numbers
        orientation: ``maximize`` for utilities, ``minimize`` for costs

    Returns:
        NormalFormGame storing utilities (costs negated)
    """
    try:
        orientation = Orientation(orientation)
    except ValueError:
        raise ValidationError(
            ErrorCode.INVALID_PARAMETER,
            f"Unknown orientation {orientation!r}; use 'maximize' or 'minimize'"
        )

    _check_labels(player_labels, strategy_labels)
    shape = tuple(len(labels) for labels in strategy_labels)
    _check_profile_count(shape)

    try:
        entries = np.asarray(payoff_entries, dtype=np.float64).ravel()
    except (TypeError, ValueError) as e:
        raise ValidationError(
            ErrorCode.SHAPE_MISMATCH,
            f"Payoff entries are not a flat list of numbers: {e}"
        )

    expected = math.prod(shape) * len(player_labels)
    if entries.size != expected:
        raise ValidationError(
            ErrorCode.SHAPE_MISMATCH,
            f"Expected {expected} payoff entries, got {entries.size}",
            details={"expected": expected, "received": int(entries.size)}
        )
    if not np.all(np.isfinite(entries)):
        bad = int(np.flatnonzero(~np.isfinite(entries))[0])
        raise ValidationError(
            ErrorCode.NON_FINITE_PAYOFF,
            f"Payoff entry {bad} is not a finite number",
            details={"entry": bad}
        )

    try:
        utilities = entries.reshape(shape + (len(player_labels),))
    except ValueError:
        raise GameTooLargeError(
            f"Game has {len(player_labels)} players, more than a payoff array can hold",
            details={"players": len(player_labels)}
        )
    if orientation is Orientation.MINIMIZE:
        utilities = -utilities

    game = _build(player_labels, strategy_labels, utilities, orientation)
    logger.debug(
        "Game constructed",
        extra={"extra_data": {"players": len(game.players), "profiles": game.num_profiles}}
    )
    return game


def validate_player(game: NormalFormGame, player: int) -> int:
    if not isinstance(player, (int, np.integer)) or not 0 <= player < game.num_players:
        raise ValidationError(
            ErrorCode.INDEX_OUT_OF_BOUNDS,
            f"Player index {player!r} is out of range for {game.num_players} players"
        )
    return int(player)


def validate_strategy(game: NormalFormGame, player: int, strategy: int) -> int:
    count = game.shape[player]
    if not isinstance(strategy, (int, np.integer)) or not 0 <= strategy < count:
        raise ValidationError(
            ErrorCode.INDEX_OUT_OF_BOUNDS,
            f"Strategy index {strategy!r} is out of range for player {game.players[player]!r} "
            f"with {count} strategies"
        )
    return int(strategy)


def validate_profile(game: NormalFormGame, profile: Sequence[int]) -> StrategyProfile:
    """Check a pure profile against the game and normalize it to a tuple of ints"""
    if len(profile) != game.num_players:
        raise ValidationError(
            ErrorCode.INDEX_OUT_OF_BOUNDS,
            f"Profile has {len(profile)} entries, game has {game.num_players} players"
        )
    return tuple(validate_strategy(game, player, s) for player, s in enumerate(profile))


def validate_mixed_profile(game: NormalFormGame, mixed: Sequence[MixedStrategy]) -> MixedProfile:
    if len(mixed) != game.num_players:
        raise ValidationError(
            ErrorCode.INDEX_OUT_OF_BOUNDS,
            f"Mixed profile has {len(mixed)} entries, game has {game.num_players} players"
        )
    for player, strategy in enumerate(mixed):
        if len(strategy.probs) != game.shape[player]:
            raise ValidationError(
                ErrorCode.INDEX_OUT_OF_BOUNDS,
                f"Mixed strategy for {game.players[player]!r} has {len(strategy.probs)} entries, "
                f"expected {game.shape[player]}"
            )
    return tuple(mixed)


def payoff(game: NormalFormGame, profile: Sequence[int]) -> np.ndarray:
    """Utility vector (one entry per player) at a pure profile"""
    profile = validate_profile(game, profile)
    return game.payoffs[profile].copy()


def to_source_orientation(game: NormalFormGame, values: np.ndarray) -> np.ndarray:
    """Undo the cost negation so values read like the input file"""
    values = np.asarray(values, dtype=np.float64)
    if game.orientation is Orientation.MINIMIZE:
        return -values
    return values.copy()


def display_payoffs(game: NormalFormGame, profile: Sequence[int]) -> np.ndarray:
    """Payoff vector at a profile in the game's source orientation (years stay years)"""
    return to_source_orientation(game, payoff(game, profile))


def source_payoffs(game: NormalFormGame) -> np.ndarray:
    """Whole payoff tensor in source orientation"""
    return to_source_orientation(game, game.payoffs)


def profile_labels(game: NormalFormGame, profile: Sequence[int]) -> Tuple[str, ...]:
    profile = validate_profile(game, profile)
    return tuple(game.strategies[player][s] for player, s in enumerate(profile))


def parse_profile(game: NormalFormGame, labels: Union[str, Sequence[str]]) -> StrategyProfile:
    """
    Resolve strategy labels (``"T,DT"`` or ``["T", "DT"]``) to a profile.

    Raises:
        ValidationError(BAD_FLAG) on a wrong count or unknown label
    """
    if isinstance(labels, str):
        labels = [part.strip() for part in labels.split(",")]
    if len(labels) != game.num_players:
        raise ValidationError(
            ErrorCode.BAD_FLAG,
            f"Profile {','.join(labels)!r} names {len(labels)} strategies, "
            f"game has {game.num_players} players"
        )
    profile = []
    for player, label in enumerate(labels):
        try:
            profile.append(game.strategies[player].index(label))
        except ValueError:
            raise ValidationError(
                ErrorCode.BAD_FLAG,
                f"Unknown strategy {label!r} for player {game.players[player]!r}; "
                f"choose from {', '.join(game.strategies[player])}",
                details={"player": game.players[player], "label": label}
            )
    return tuple(profile)


def restrict(game: NormalFormGame, survivors: Sequence[Sequence[int]]) -> NormalFormGame:
    """Sub-game keeping only the listed strategy indices of each player"""
    if len(survivors) != game.num_players:
        raise ValidationError(
            ErrorCode.SHAPE_MISMATCH,
            f"Got survivor lists for {len(survivors)} players, expected {game.num_players}"
        )
    kept = []
    for player, indices in enumerate(survivors):
        if len(indices) == 0:
            raise ValidationError(
                ErrorCode.EMPTY_GAME,
                f"Restriction leaves player {game.players[player]!r} without strategies"
            )
        kept.append([validate_strategy(game, player, s) for s in indices])

    index = np.ix_(*kept, range(game.num_players))
    return _build(
        game.players,
        [[game.strategies[player][s] for s in indices] for player, indices in enumerate(kept)],
        game.payoffs[index],
        game.orientation,
    )


def transform_payoffs(game: NormalFormGame, player: int, scale: float, shift: float) -> NormalFormGame:
    """Apply ``u -> scale * u + shift`` to one player's utilities (scale > 0)"""
    player = validate_player(game, player)
    if not scale > 0:
        raise ValidationError(ErrorCode.INVALID_PARAMETER, "Affine scale must be positive")
    utilities = np.array(game.payoffs, dtype=np.float64)
    utilities[..., player] = scale * utilities[..., player] + shift
    return _build(game.players, game.strategies, utilities, game.orientation)


# Scenario games

def pd_from_years(
    both_tell: float = 5.0,
    betrayer: float = 1.0,
    sucker: float = 8.0,
    both_silent: float = 2.0,
) -> NormalFormGame:
    """
    Prisoner's dilemma in prison years for Bob (player 0) and Jane (player 1).

    Strategy ``T`` tells on the other prisoner, ``DT`` stays silent. The
    teller of a one-sided betrayal serves ``betrayer`` years and the silent
    one ``sucker`` years.
    """
    if not betrayer < both_silent < both_tell < sucker:
        raise ValidationError(
            ErrorCode.INVALID_ORDERING,
            "Years must satisfy betrayer < both_silent < both_tell < sucker "
            "for the game to be a prisoner's dilemma",
            details={
                "both_tell": both_tell,
                "betrayer": betrayer,
                "sucker": sucker,
                "both_silent": both_silent,
            }
        )
    entries = [
        both_tell, both_tell,      # (T, T)
        betrayer, sucker,          # (T, DT)
        sucker, betrayer,          # (DT, T)
        both_silent, both_silent,  # (DT, DT)
    ]
    return new_game(["Bob", "Jane"], [["T", "DT"], ["T", "DT"]], entries, Orientation.MINIMIZE)


def exchange_game(
    v_own_a: float,
    v_other_a: float,
    v_own_b: float,
    v_other_b: float,
) -> NormalFormGame:
    """
    Two traders swap items without being able to enforce the deal.

    ``v_own_x`` is what trader x's own item is worth to x, ``v_other_x`` what
    the other trader's item is worth to x. Betraying keeps your item and takes
    the other's; mutual betrayal leaves both with what they brought.
    """
    values = (v_own_a, v_other_a, v_own_b, v_other_b)
    if not all(math.isfinite(v) and v > 0 for v in values):
        raise ValidationError(
            ErrorCode.INVALID_VALUATION,
            "All valuations must be positive",
            details={"values": list(values)}
        )
    if not (v_other_a > v_own_a and v_other_b > v_own_b):
        raise ValidationError(
            ErrorCode.INVALID_VALUATION,
            "Each trader must value the other's item above their own, "
            "otherwise there is nothing to trade",
            details={"values": list(values)}
        )
    entries = [
        v_other_a, v_other_b,        # (Honest, Honest)
        0.0, v_own_b + v_other_b,    # (Honest, Betray)
        v_own_a + v_other_a, 0.0,    # (Betray, Honest)
        v_own_a, v_own_b,            # (Betray, Betray)
    ]
    return new_game(["A", "B"], [["Honest", "Betray"], ["Honest", "Betray"]], entries)

