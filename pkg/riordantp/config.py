from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Windows
    default_window: int = 10
    tp_size_cap: int = 12  # largest side enumerated for order "all" without --force

    # Output
    schema_version: int = 1

    # Logging
    log_level: str = "WARNING"
    log_format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # API Configuration
    api_title: str = "riordantp API"
    api_v1_prefix: str = "/api/v1"
    rate_limit: str = "60/minute"
    host: str = "0.0.0.0"
    port: int = 8000
    debug: bool = False

    model_config = SettingsConfigDict(
        env_prefix="RIORDANTP_",
        env_file=".env",
        case_sensitive=False,
    )

    @field_validator("default_window", "tp_size_cap")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError("must be at least 1")
        return value

    @classmethod
    def defaults(cls) -> "Settings":
        """Field defaults only, ignoring the environment and .env."""
        return cls.model_construct()


# Global settings instance
settings = Settings()
