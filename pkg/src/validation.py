"""
Input Validation Functions - flagtwist

Validators for everything that enters through the CLI or a configuration
file: fraction strings, bidegrees, seeds, sampling modes, member checks and
scenario parameters. Single-value validators return bool; record validators
return (is_valid, errors) so every problem is reported at once.
"""

from typing import List, Optional, Tuple

from src.errors import BadParams
from src.gaussrat import _FRACTION_PATTERN
from src.settings import FlagTwistSettings, get_settings

VALID_MODES = ("general", "collinear")
VALID_CHECKS = ("irreducible", "singular", "contains")
MAX_SEED = 2 ** 64


# ============================================================================
# DATA VALIDATION FUNCTIONS
# ============================================================================

#1.
def validate_fraction_string(text: str) -> bool:
    """
    Validate that a string is a "num/den" fraction (or a bare integer).

    Args:
        text (str): The candidate string

    Returns:
        bool: True if text parses as a fraction with nonzero denominator

    Raises:
        TypeError: If text is not a string

    Examples:
        >>> validate_fraction_string("3/5")
        True
        >>> validate_fraction_string("1/0")
        False
        >>> validate_fraction_string("0.5")
        False
    """
    if not isinstance(text, str):
        raise TypeError(f"Fraction must be a string, got {type(text).__name__}")

    match = _FRACTION_PATTERN.match(text)
    if match is None:
        return False

    # A missing denominator means 1
    return match.group(2) is None or int(match.group(2)) != 0

#2.
def validate_bidegree(bidegree: Tuple[int, int]) -> bool:
    """
    Validate that a bidegree is a pair of nonnegative ints other than (0,0).

    Args:
        bidegree (tuple): Candidate (a, b)

    Returns:
        bool: True if the bidegree is usable for a linear system

    Examples:
        >>> validate_bidegree((1, 2))
        True
        >>> validate_bidegree((0, 0))
        False
        >>> validate_bidegree((1, -1))
        False
    """
    if not isinstance(bidegree, tuple) or len(bidegree) != 2:
        return False
    if not all(isinstance(x, int) and not isinstance(x, bool) for x in bidegree):
        return False
    a, b = bidegree
    return a >= 0 and b >= 0 and (a, b) != (0, 0)

#3.
def parse_bidegree(text: str) -> Tuple[int, int]:
    """
    Parse "a,b" into a validated bidegree.

    Raises:
        BadParams: If the text is not two comma-separated nonnegative ints
            or is "0,0"

    Examples:
        >>> parse_bidegree("1,2")
        (1, 2)
    """
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 2 or not all(part.lstrip("-").isdigit() for part in parts):
        raise BadParams(f"Bidegree must look like 'a,b', got {text!r}")
    bidegree = (int(parts[0]), int(parts[1]))
    if not validate_bidegree(bidegree):
        raise BadParams(f"Bidegree must be nonnegative and not (0,0), got {text!r}")
    return bidegree

#4.
def validate_seed(seed: int) -> bool:
    """
    Validate that a seed is an unsigned 64-bit integer.

    Examples:
        >>> validate_seed(7)
        True
        >>> validate_seed(-1)
        False
    """
    if isinstance(seed, bool) or not isinstance(seed, int):
        return False
    return 0 <= seed < MAX_SEED

#5.
def validate_mode(mode: str) -> bool:
    """True if mode names a configuration sampling mode."""
    return isinstance(mode, str) and mode.strip().lower() in VALID_MODES

#6.
def parse_checks(text: str) -> List[str]:
    """
    Parse a comma-separated list of member checks.

    Raises:
        BadParams: If a check name is unknown

    Examples:
        >>> parse_checks("irreducible, contains")
        ['irreducible', 'contains']
    """
    checks = [part.strip().lower() for part in text.split(",") if part.strip()]
    unknown = [c for c in checks if c not in VALID_CHECKS]
    if unknown:
        raise BadParams(f"Unknown checks {unknown}; choose from {list(VALID_CHECKS)}")
    return checks

#7.
def validate_scenario_params(d: int, n: int, trials: int, seed: Optional[int] = None,
                             settings: Optional[FlagTwistSettings] = None) -> Tuple[bool, List[str]]:
    """
    Validate the parameters of a scenario run against the configured ranges.

    Collects every problem instead of stopping at the first.

    Args:
        d (int): Second degree of the (1,d) systems, 1 <= d <= max_d
        n (int): Number of conics, 1 <= n <= max_n
        trials (int): 1 <= trials <= max_trials
        seed (int): Unsigned 64-bit seed; skipped when None
        settings: Range limits; defaults to get_settings()

    Returns:
        tuple[bool, list[str]]: validity flag and error messages

    Examples:
        >>> validate_scenario_params(2, 3, 20, 1)
        (True, [])
        >>> ok, errors = validate_scenario_params(9, 0, 0, -1)
        >>> ok, len(errors)
        (False, 4)
    """
    settings = settings or get_settings()
    errors = []

    if not isinstance(d, int) or not 1 <= d <= settings.max_d:
        errors.append(f"d must be an integer in [1, {settings.max_d}], got {d}")
    if not isinstance(n, int) or not 1 <= n <= settings.max_n:
        errors.append(f"n must be an integer in [1, {settings.max_n}], got {n}")
    if not isinstance(trials, int) or not 1 <= trials <= settings.max_trials:
        errors.append(f"trials must be an integer in [1, {settings.max_trials}], got {trials}")
    if seed is not None and not validate_seed(seed):
        errors.append(f"seed must be an integer in [0, 2^64), got {seed}")

    return len(errors) == 0, errors
