"""
Configuration settings for the zeta calculator
"""

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Runtime settings, read from ZETA_* environment variables or a .env file"""

    # Precision
    default_order: int = Field(default=16, ge=0, description="Truncation order N when --order is not given")
    max_order: int = Field(default=4096, ge=0, description="Largest accepted truncation order")

    # Output
    output_format: str = Field(default="text", description="Output format: text or json")

    # Random sweeps
    sweep_profile: str = Field(default="acceptance", description="Verification profile used by the sweep command")
    random_seed: int = Field(default=0, description="Seed for random class sampling")
    progress_bar: bool = Field(default=True, description="Show tqdm progress during sweeps")

    # General settings
    log_level: str = Field(default="WARNING", description="Logging level")

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_prefix="ZETA_",
        extra="ignore",
    )

    @field_validator("output_format")
    @classmethod
    def _known_format(cls, value: str) -> str:
        value = value.lower()
        if value not in ("text", "json"):
            raise ValueError(f"Unknown output format: {value}")
        return value

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()


# Global settings instance
settings = Settings()
