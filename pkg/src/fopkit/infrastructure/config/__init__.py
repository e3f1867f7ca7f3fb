"""Configuration system.

Usage:

    from fopkit.infrastructure.config import settings

    settings.sweep.workers
    settings.units.cf_budget
"""

from fopkit.infrastructure.config.accessor import get_settings, settings
from fopkit.infrastructure.config.components import (
    ClassGroupSettings,
    FactorSettings,
    LoggingSettings,
    OracleSettings,
    OutputSettings,
    SweepSettings,
    UnitSettings,
)

__all__ = [
    # Components
    "SweepSettings",
    "FactorSettings",
    "UnitSettings",
    "OracleSettings",
    "ClassGroupSettings",
    "OutputSettings",
    "LoggingSettings",
    # Accessor
    "get_settings",
    "settings",
]
