"""Root conftest so `import src` resolves when pytest runs from the repository root."""

import pytest

from src.settings import FlagTwistSettings


@pytest.fixture
def settings():
    """Default bounds, independent of FLAGTWIST_* variables in the environment."""
    return FlagTwistSettings(_env_file=None, max_hypothesis_retries=10, log_level="WARNING")
