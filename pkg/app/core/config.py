"""Application configuration using pydantic-settings."""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings loaded from environment variables."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
    )

    # App
    app_env: str = "development"
    log_level: str = "INFO"

    # Suite defaults
    suite_n_min: int = 3
    suite_n_max: int = 9
    suite_seed: int = 42
    max_workers: int = 4
    output_dir: str = "out"

    # Solver budgets (vertex caps)
    vertex_budget: int = 200
    np_hard_budget: int = 64
    iso_budget: int = 200
    aut_budget: int = 120
    aut_enumeration_cap: int = 24
    conjecture_budget: int = 12
    exhaustive_matching_cap: int = 16

    # Randomized checks
    oracle_max_vertices: int = 12
    oracle_instances: int = 200
    roundtrip_instances: int = 100
    roundtrip_max_vertices: int = 20
    random_pair_instances: int = 50
    random_pair_max_vertices: int = 5


settings = Settings()
