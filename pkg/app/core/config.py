"""
Application configuration settings and solver constants
"""
from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict


# Solver constants. These shape every printed result, so they are fixed in
# code and never read from the environment.
PAYOFF_TOLERANCE: float = 1e-9
PROBABILITY_TOLERANCE: float = 1e-9
MAX_PROFILES: int = 10**6

DISPLAY_DECIMALS: int = 9
DEFAULT_MAX_STEPS: int = 100
DEFAULT_PD_YEARS: tuple = (5.0, 1.0, 8.0, 2.0)  # both_tell, betrayer, sucker, both_silent
DEFAULT_ARMS_RACE_PAYOFFS: tuple = (3.0, 2.0, 1.0, 0.0)  # t, r, p, s
DEFAULT_COUNTRIES: int = 2


class Settings(BaseSettings):
    # Application settings
    PROJECT_NAME: str = "Normal Form Game Solver"
    VERSION: str = "1.0.0"

    # Logging settings (stderr / log file only)
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "text"  # "text" or "json"
    LOG_FILE: Optional[str] = None

    @property
    def use_json_logs(self) -> bool:
        """Whether log records are emitted as JSON lines"""
        return self.LOG_FORMAT.lower() == "json"

    model_config = SettingsConfigDict(env_file=".env", extra="ignore")


settings = Settings()
