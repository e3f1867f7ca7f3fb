"""Pytest configuration for fopkit tests.

Markers:
- @pytest.mark.contract: Public interface tests (API shapes, CLI surface)
- @pytest.mark.business_logic: Algorithm and theorem tests
- @pytest.mark.regression: Pinned printed lists and counts
- @pytest.mark.slow: Bounds of 10^5 and above (deselect with -m "not slow")
"""

import pytest

from fopkit.arith.factor import is_squarefree
from fopkit.infrastructure.run_context import clear_run_context


def pytest_configure(config):
    config.addinivalue_line("markers", "contract: Public interface tests")
    config.addinivalue_line("markers", "business_logic: Algorithm and theorem tests")
    config.addinivalue_line("markers", "regression: Pinned printed lists and counts")
    config.addinivalue_line("markers", "slow: Large-bound reproductions")


@pytest.fixture(autouse=True)
def _isolated_run_context():
    yield
    clear_run_context()


@pytest.fixture(scope="session")
def squarefree_radicals() -> list[int]:
    """Square-free M in [2, 500]."""
    return [M for M in range(2, 501) if is_squarefree(M)]
