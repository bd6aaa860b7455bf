"""
Runtime settings for flagtwist, read from FLAGTWIST_* environment variables.
"""

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class FlagTwistSettings(BaseSettings):
    """
    Tunable bounds for sampling, retries and parameter ranges.

    Examples:
        FLAGTWIST_MAX_SAMPLING_RETRIES=2000 flagtwist verify --scenario u6 ...
    """

    model_config = SettingsConfigDict(env_prefix="FLAGTWIST_")

    # Coordinate pool: numerators in [-bound, bound], denominators in [1, bound]
    numerator_bound: int = Field(default=20, ge=1)
    denominator_bound: int = Field(default=10, ge=1)

    max_sampling_retries: int = Field(default=500, ge=1)
    max_hypothesis_retries: int = Field(default=10, ge=0)

    max_d: int = Field(default=4, ge=1)
    max_n: int = Field(default=8, ge=1)
    max_trials: int = Field(default=1000, ge=1)

    smoothness_samples: int = Field(default=50, ge=1)
    fiber_samples: int = Field(default=5, ge=1)
    off_locus_points: int = Field(default=20, ge=1)

    log_level: str = "WARNING"


@lru_cache(maxsize=1)
def get_settings() -> FlagTwistSettings:
    return FlagTwistSettings()
