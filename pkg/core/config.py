from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="QCREG_", env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    environment: str = Field("development")
    log_level: str = Field("INFO")

    seed: int = Field(0)

    witness_attempts: int = Field(64)
    witness_coordinate_bound: int = Field(3)
    symbolic_indeterminate_cap: int = Field(16)

    identity_degree_cap: int = Field(6)
    identity_large_degree_cap: int = Field(7)
    verify_trials: int = Field(200)
    exhaustive_basis_limit: int = Field(8)

    max_group_order: int = Field(64)
    tuple_check_exhaustive_limit: int = Field(4)

    sentry_dsn: Optional[str] = Field(default=None)
    metrics_enabled: bool = Field(True)


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()
