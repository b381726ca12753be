"""
Pydantic models for game files and command reports
"""
from pydantic import BaseModel, Field, ConfigDict
from typing import Any, List, Optional, Dict, Union

from app.models.game import Orientation


Number = Union[int, float]


class GameDocument(BaseModel):
    """On-disk game file: one JSON object per game"""
    players: List[str] = Field(..., description="Player labels in order")
    strategies: List[List[str]] = Field(..., description="Strategy labels, one list per player")
    orientation: Orientation = Field(..., description="'maximize' for utilities, 'minimize' for costs")
    payoffs: Any = Field(
        ...,
        description="Nested arrays, one level per player; innermost array holds one number per player"
    )

    model_config = ConfigDict(extra="forbid", json_schema_extra={
        "example": {
            "players": ["Jane", "Bob"],
            "strategies": [["T", "DT"], ["T", "DT"]],
            "orientation": "minimize",
            "payoffs": [[[5, 5], [1, 8]], [[8, 1], [2, 2]]]
        }
    })


class ProfileView(BaseModel):
    """A pure profile with its payoffs in source orientation"""
    profile: List[str] = Field(..., description="Strategy label per player")
    payoffs: List[Number] = Field(..., description="Payoff per player, as in the input file")

    model_config = ConfigDict(json_schema_extra={
        "example": {"profile": ["T", "T"], "payoffs": [5, 5]}
    })


class MixedStrategyView(BaseModel):
    player: str
    probabilities: Dict[str, Number] = Field(..., description="Strategy label -> probability")


class MixedProfileView(BaseModel):
    """Mixed equilibrium: one probability vector per player"""
    strategies: List[MixedStrategyView]
    expected_payoffs: List[Number] = Field(..., description="Expected payoff per player, source orientation")

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "strategies": [
                {"player": "Row", "probabilities": {"Heads": 0.5, "Tails": 0.5}},
                {"player": "Column", "probabilities": {"Heads": 0.5, "Tails": 0.5}}
            ],
            "expected_payoffs": [0, 0]
        }
    })


class EquilibriumView(BaseModel):
    """Solution concepts for one game"""
    pure_equilibria: List[ProfileView] = Field(default_factory=list)
    mixed_equilibria: Optional[List[MixedProfileView]] = Field(
        None, description="Only present for 2x2 games"
    )
    dominant_strategy_profile: Optional[ProfileView] = None
    pareto_optimal: List[ProfileView] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)


class DominanceRelation(BaseModel):
    """Strategy ``dominant`` dominates strategy ``dominated`` for ``player``"""
    player: str
    dominant: str
    dominated: str
    mode: str = Field(..., description="'strict' or 'weak'")


class PlayerDominance(BaseModel):
    """Dominance structure of one player's strategies"""
    player: str
    relations: List[DominanceRelation] = Field(default_factory=list)
    strictly_dominant: List[str] = Field(default_factory=list)
    weakly_dominant: List[str] = Field(default_factory=list)


class EliminationStepView(BaseModel):
    round: int = Field(..., ge=1)
    player: str
    eliminated: str
    dominator: str
    mode: str


class TrajectoryView(BaseModel):
    """Best-response dynamics run"""
    states: List[List[str]] = Field(..., description="Visited profiles, start first")
    converged: bool
    steps_taken: int = Field(..., ge=0)


class CliReport(BaseModel):
    """Result of one command, rendered as text or JSON"""
    command: str = Field(..., description="Subcommand that produced the report")
    inputs: Dict[str, Any] = Field(..., description="Canonical echo of the parsed inputs")
    orientation: Orientation = Field(..., description="Orientation payoffs are displayed in")
    equilibria: Optional[EquilibriumView] = None
    pareto_optimal: Optional[List[ProfileView]] = None
    dominance: Optional[List[PlayerDominance]] = None
    elimination: Optional[List[EliminationStepView]] = None
    reduced_game: Optional[GameDocument] = None
    trajectory: Optional[TrajectoryView] = None
    notes: List[str] = Field(default_factory=list)

    model_config = ConfigDict(json_schema_extra={
        "example": {
            "command": "solve",
            "inputs": {"game_file": "prisoners.json", "players": ["Jane", "Bob"]},
            "orientation": "minimize",
            "equilibria": {
                "pure_equilibria": [{"profile": ["T", "T"], "payoffs": [5, 5]}],
                "mixed_equilibria": [],
                "dominant_strategy_profile": {"profile": ["T", "T"], "payoffs": [5, 5]},
                "pareto_optimal": [],
                "notes": []
            },
            "notes": []
        }
    })
