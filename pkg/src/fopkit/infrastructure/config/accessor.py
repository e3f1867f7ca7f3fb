"""Unified settings access.

Provides a single import point for library code and scripts.
"""

from functools import lru_cache
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from fopkit.config import Settings


@lru_cache
def get_settings() -> "Settings":
    """Get the process-wide settings.

    Lazily imports fopkit.config so the environment is read on first use.
    """
    from fopkit.config import settings

    return settings


class _SettingsProxy:
    """Proxy for direct attribute access: settings.sweep.workers"""

    def __getattr__(self, name: str):
        return getattr(get_settings(), name)

    def __repr__(self) -> str:
        return repr(get_settings())


settings = _SettingsProxy()
