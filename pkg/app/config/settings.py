"""
Configuration management using Pydantic Settings.
Pattern: BaseSettings with @lru_cache singleton

Every cap and sweep bound can be overridden from the environment
(prefix TORUS_) or a local .env file. CLI flags win over both.
"""

from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict
from functools import lru_cache


class Settings(BaseSettings):
    """
    Application settings loaded from environment variables.
    """

    # Scan caps
    CYCLE_CAP: int = 1_000_000
    TREE_CAP: int = 100_000

    # Consistency sweep defaults (verify)
    GRID_SIZE: int = 4
    MAX_EDGES: int = 6
    ORACLE_BUDGET: int = 100_000
    EMBEDDING_LIMIT: Optional[int] = None  # unset: every embedding is visited

    # Application
    APP_NAME: str = "Torus Spatial Graph Classifier"
    APP_VERSION: str = "1.0.0"
    LOG_LEVEL: str = "INFO"
    DEBUG: bool = False

    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="TORUS_", case_sensitive=True, extra="ignore"
    )


@lru_cache()
def get_settings() -> Settings:
    """
    Cached settings instance.
    @lru_cache ensures singleton behavior; call get_settings.cache_clear()
    after changing the environment in tests.
    """
    return Settings()
