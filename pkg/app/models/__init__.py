# Data models package

# Solver types
from .game import (
    MixedProfile,
    MixedStrategy,
    NormalFormGame,
    Orientation,
    StrategyProfile,
    new_game,
)

# Pydantic models (game files and reports)
from .schemas import (
    CliReport,
    GameDocument,
    ProfileView,
)

__all__ = [
    # Solver types
    "MixedProfile",
    "MixedStrategy",
    "NormalFormGame",
    "Orientation",
    "StrategyProfile",
    "new_game",
    # Pydantic models
    "CliReport",
    "GameDocument",
    "ProfileView",
]
