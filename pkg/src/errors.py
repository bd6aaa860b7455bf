"""
Error Types - flagtwist

Every domain failure raised by the package derives from FlagTwistError,
which is itself a ValueError, so callers that only know to catch ValueError
keep working.
"""


class FlagTwistError(ValueError):
    """Base class for all flagtwist domain errors."""


# ══════════════════════════════════════════════════════════════════════
# EXACT CORE
# ══════════════════════════════════════════════════════════════════════

class AllZero(FlagTwistError):
    """Every input was zero where a nonzero value is required."""


class LinearAlgebraError(FlagTwistError):
    """An internal exact-linear-algebra invariant was violated."""


# ══════════════════════════════════════════════════════════════════════
# POLYNOMIALS
# ══════════════════════════════════════════════════════════════════════

class BidegreeMismatch(FlagTwistError):
    """A monomial or operand does not match the declared bidegree."""


class DegenerateParam(FlagTwistError):
    """A curve parametrization vanishes at some parameter value."""


# ══════════════════════════════════════════════════════════════════════
# FLAG GEOMETRY
# ══════════════════════════════════════════════════════════════════════

class NotOnFlag(FlagTwistError):
    """A point pair (p, l) does not satisfy p.l = 0."""


class DegenerateCross(FlagTwistError):
    """A cross product vanished where a projective point was expected."""


class NotSmooth(FlagTwistError):
    """A conic was requested with q.m = 0."""


class SameConic(FlagTwistError):
    """Two conics that must be distinct are projectively equal."""


class RepeatedConic(FlagTwistError):
    """A triple of conics repeats a q point."""


class ParallelData(FlagTwistError):
    """Two conics share a q or an m point, so no connecting curve exists."""


class ExhaustedRetries(FlagTwistError):
    """A rejection sampler gave up after its configured number of draws."""


# ══════════════════════════════════════════════════════════════════════
# LINEAR SYSTEMS
# ══════════════════════════════════════════════════════════════════════

class NotDisjoint(FlagTwistError):
    """A configuration used for a linear system has meeting conics."""


class EmptySystem(FlagTwistError):
    """A member was requested from a linear system with no sections."""


class ZeroDivisor(FlagTwistError):
    """A divisor form is zero on the flag threefold."""


class ZeroOnFlag(FlagTwistError):
    """A form expected to define a surface is a multiple of the flag form."""


class VerticalVectorZero(FlagTwistError):
    """The vertical vector of a (1,d) form vanished identically."""


class NotOnSurface(FlagTwistError):
    """A point or curve is not contained in the surface under test."""


class HypothesisFailed(FlagTwistError):
    """A drawn instance does not satisfy a claim's hypothesis."""


# ══════════════════════════════════════════════════════════════════════
# HARNESS / CLI
# ══════════════════════════════════════════════════════════════════════

class UnknownScenario(FlagTwistError):
    """The requested scenario name is not registered."""


class BadParams(FlagTwistError):
    """Scenario or command parameters are outside their documented ranges."""


class ConfigParseError(FlagTwistError):
    """A configuration file could not be parsed or validated."""
