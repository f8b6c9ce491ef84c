from __future__ import annotations

from functools import lru_cache

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class OrbitopeSettings(BaseSettings):
    """Knobs read from ORBITOPE_* environment variables (or a .env file)."""

    model_config = SettingsConfigDict(env_prefix="ORBITOPE_", extra="ignore")

    guard_n: int = Field(
        default=5,
        ge=1,
        description="Largest rank whose full face lattice the oracle enumerates.",
    )
    verify_max_n: int = Field(
        default=8,
        ge=1,
        description="Default upper rank for verification suites.",
    )
    log_level: str = Field(default="WARNING")


@lru_cache(maxsize=1)
def get_settings() -> OrbitopeSettings:
    return OrbitopeSettings()
