"""
Arms-race model and myopic best-response dynamics.

Countries choose ``W`` (keep building weapons) or ``NW`` (stop). Every pair
of countries plays a prisoner's dilemma with temptation ``t``, reward ``r``,
punishment ``p`` and sucker payoff ``s``; a country's utility is the sum over
all its opponents.
"""
import logging
import math
import string
from dataclasses import dataclass
from typing import List, Sequence

import numpy as np

from app.core.config import MAX_PROFILES, PAYOFF_TOLERANCE
from app.core.errors import ErrorCode, GameTooLargeError, ValidationError
from app.models.game import NormalFormGame, StrategyProfile, new_game, validate_profile
from app.services.analysis import EquilibriumReport, best_responses, equilibrium_report

logger = logging.getLogger(__name__)


ARM = 0
DISARM = 1
ARMS_STRATEGIES = ("W", "NW")


@dataclass(frozen=True)
class ArmsRaceModel:
    """N countries with pairwise prisoner's-dilemma incentives"""
    n_countries: int
    t: float
    r: float
    p: float
    s: float

    def __post_init__(self):
        if isinstance(self.n_countries, bool) or not isinstance(self.n_countries, int) or self.n_countries < 2:
            raise ValidationError(
                ErrorCode.INVALID_MODEL,
                f"An arms race needs at least 2 countries, got {self.n_countries!r}",
                details={"n_countries": self.n_countries}
            )
        values = (self.t, self.r, self.p, self.s)
        if not all(math.isfinite(v) for v in values):
            raise ValidationError(ErrorCode.INVALID_MODEL, "Payoff parameters must be finite numbers")
        ordered = (
            self.t - self.r > PAYOFF_TOLERANCE
            and self.r - self.p > PAYOFF_TOLERANCE
            and self.p - self.s > PAYOFF_TOLERANCE
        )
        if not ordered:
            raise ValidationError(
                ErrorCode.INVALID_MODEL,
                "Payoffs must satisfy t > r > p > s (temptation > reward > punishment > sucker)",
                details={"t": self.t, "r": self.r, "p": self.p, "s": self.s}
            )

    def pair_payoff(self, mine: int, theirs: int) -> float:
        """What one country earns from its interaction with a single opponent"""
        if mine == ARM:
            return self.p if theirs == ARM else self.t
        return self.s if theirs == ARM else self.r

    def cooperation_temptation(self) -> float:
        """Gain of a single country that re-arms while everyone else has disarmed"""
        return (self.n_countries - 1) * (self.t - self.r)


@dataclass
class DynamicsTrajectory:
    """States visited by best-response dynamics (only changes are recorded)"""
    states: List[StrategyProfile]
    converged: bool
    steps_taken: int

    @property
    def final_state(self) -> StrategyProfile:
        return self.states[-1]


def country_labels(n_countries: int) -> List[str]:
    if n_countries <= len(string.ascii_uppercase):
        return list(string.ascii_uppercase[:n_countries])
    return [f"Country {i + 1}" for i in range(n_countries)]


def arms_race_game(model: ArmsRaceModel) -> NormalFormGame:
    """Build the N-country W/NW game as a sum of pairwise prisoner's dilemmas"""
    n = model.n_countries
    if 2 ** n > MAX_PROFILES:
        raise GameTooLargeError(
            f"{n} countries give {2 ** n} pure profiles; the limit is {MAX_PROFILES}",
            details={"countries": n, "limit": MAX_PROFILES}
        )

    grid = np.indices((2,) * n)
    arming = grid == ARM
    armed_total = arming.sum(axis=0)

    utilities = np.empty((2,) * n + (n,))
    for country in range(n):
        armed_others = armed_total - arming[country]
        disarmed_others = (n - 1) - armed_others
        utilities[..., country] = np.where(
            arming[country],
            armed_others * model.p + disarmed_others * model.t,
            armed_others * model.s + disarmed_others * model.r,
        )

    logger.debug(
        "Arms race game built",
        extra={"extra_data": {"countries": n, "t": model.t, "r": model.r, "p": model.p, "s": model.s}}
    )
    return new_game(country_labels(n), [list(ARMS_STRATEGIES)] * n, utilities.ravel())


def arms_race_report(model: ArmsRaceModel) -> EquilibriumReport:
    """Equilibria, dominant strategies and Pareto set of the arms race"""
    return equilibrium_report(arms_race_game(model))


def best_response_dynamics(
    game: NormalFormGame,
    start: Sequence[int],
    max_steps: int,
) -> DynamicsTrajectory:
    """
    Round-robin myopic best response.

    Players move in order 0, 1, ... One step is one player's update: a player
    already best-responding keeps its strategy, otherwise it switches to its
    lowest-index best response. The run converges once a full round of
    updates passes without a change and stops unconverged after
    ``max_steps`` updates.
    """
    state = list(validate_profile(game, start))
    if isinstance(max_steps, bool) or not isinstance(max_steps, int) or max_steps < 1:
        raise ValidationError(
            ErrorCode.INVALID_PARAMETER,
            f"max_steps must be a positive integer, got {max_steps!r}"
        )

    states: List[StrategyProfile] = [tuple(state)]
    steps = 0
    unchanged = 0
    converged = False
    player = 0

    while steps < max_steps:
        responses = best_responses(game, player, state)
        steps += 1
        if state[player] in responses:
            unchanged += 1
        else:
            state[player] = min(responses)
            states.append(tuple(state))
            unchanged = 0
        if unchanged >= game.num_players:
            converged = True
            break
        player = (player + 1) % game.num_players

    logger.debug(
        "Best-response dynamics finished",
        extra={"extra_data": {"steps": steps, "converged": converged, "changes": len(states) - 1}}
    )
    return DynamicsTrajectory(states=states, converged=converged, steps_taken=steps)
