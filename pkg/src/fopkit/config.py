import os

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

from fopkit.infrastructure.config.components import (
    ClassGroupSettings,
    FactorSettings,
    LoggingSettings,
    OracleSettings,
    OutputSettings,
    SweepSettings,
    UnitSettings,
)

_ENV_FILE = os.getenv("ENV_FILE", ".env")


class Settings(BaseSettings):
    """fopkit settings, read from the environment and an optional .env file."""

    model_config = SettingsConfigDict(
        env_file=_ENV_FILE,
        env_file_encoding="utf-8",
        extra="ignore",
        env_nested_delimiter="__",
    )

    sweep: SweepSettings = Field(default_factory=SweepSettings)
    factor: FactorSettings = Field(default_factory=FactorSettings)
    units: UnitSettings = Field(default_factory=UnitSettings)
    oracle: OracleSettings = Field(default_factory=OracleSettings)
    classgroup: ClassGroupSettings = Field(default_factory=ClassGroupSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)


settings = Settings()
