"""
Seeded Configuration Generator - flagtwist

Deterministic random instances: Gaussian-rational coordinates drawn from a
bounded pool, conic configurations in general or collinear position, and
the circle family of twistor fibers lying on a j-invariant (1,1) surface.

General position is never assumed from the sampler: every open condition
(distinct points, disjointness, no collinear triple) is checked exactly and
failing draws are rejected.
"""

import logging
import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from src.bipoly import BiForm
from src.curves import Conic
from src.errors import ExhaustedRetries, NotSmooth
from src.flag_geometry import Configuration, FlagPoint, are_disjoint, classify_config
from src.exact_matrix import det3
from src.gaussrat import GaussRat
from src.proj_point import ProjPoint, cross, is_zero_vector, plane_basis
from src.settings import FlagTwistSettings, get_settings

logger = logging.getLogger(__name__)


class ConfigMode(str, Enum):
    GENERAL = "general"
    COLLINEAR = "collinear"


# ══════════════════════════════════════════════════════════════════════
# PRIMITIVE DRAWS
# ══════════════════════════════════════════════════════════════════════

def random_fraction(rng: random.Random, settings: FlagTwistSettings) -> Fraction:
    return Fraction(
        rng.randint(-settings.numerator_bound, settings.numerator_bound),
        rng.randint(1, settings.denominator_bound),
    )


def random_gaussrat(rng: random.Random, settings: FlagTwistSettings) -> GaussRat:
    return GaussRat(random_fraction(rng, settings), random_fraction(rng, settings))


def random_vector(rng: random.Random, settings: FlagTwistSettings) -> List[GaussRat]:
    return [random_gaussrat(rng, settings) for _ in range(3)]


def random_point(rng: random.Random, settings: FlagTwistSettings) -> ProjPoint:
    """
    A random point of P^2.

    Raises:
        ExhaustedRetries: If only zero vectors were drawn
    """
    for _ in range(settings.max_sampling_retries):
        v = random_vector(rng, settings)
        if not is_zero_vector(v):
            return ProjPoint(v)
    raise ExhaustedRetries("Could not draw a nonzero coordinate vector")


def random_flag_point(rng: random.Random, settings: Optional[FlagTwistSettings] = None) -> FlagPoint:
    """A random point (p, l) of F with l = p x r for a random r."""
    settings = settings or get_settings()
    for _ in range(settings.max_sampling_retries):
        p = random_point(rng, settings)
        l = cross(p.coords, random_vector(rng, settings))
        if not is_zero_vector(l):
            return FlagPoint(p, ProjPoint(l))
    raise ExhaustedRetries("Could not draw a point of the flag threefold")


def random_conic(rng: random.Random, settings: FlagTwistSettings, twistor: bool,
                 q: Optional[ProjPoint] = None) -> Conic:
    """A random smooth conic, optionally with a prescribed q."""
    q = q or random_point(rng, settings)
    if twistor:
        return Conic(q, q.conj())
    for _ in range(settings.max_sampling_retries):
        m = random_point(rng, settings)
        if q.dot(m):
            return Conic(q, m)
    raise ExhaustedRetries(f"Could not draw m with q.m != 0 for q={q}")


def random_meeting_pair(rng: random.Random,
                        settings: Optional[FlagTwistSettings] = None) -> Tuple[Conic, Conic, FlagPoint]:
    """Two distinct smooth conics through a common random point of F."""
    settings = settings or get_settings()
    x = random_flag_point(rng, settings)
    conics: List[Conic] = []
    for _ in range(settings.max_sampling_retries):
        m = cross(x.p.coords, random_vector(rng, settings))
        q = cross(x.l.coords, random_vector(rng, settings))
        if is_zero_vector(m) or is_zero_vector(q):
            continue
        try:
            candidate = Conic(ProjPoint(q), ProjPoint(m))
        except NotSmooth:
            continue
        if candidate not in conics:
            conics.append(candidate)
        if len(conics) == 2:
            return conics[0], conics[1], x
    raise ExhaustedRetries("Could not draw two conics through a common point")


# ══════════════════════════════════════════════════════════════════════
# CONFIGURATIONS
# ══════════════════════════════════════════════════════════════════════

def random_config(n: int, mode: ConfigMode, twistor: bool, seed: int,
                  settings: Optional[FlagTwistSettings] = None) -> Configuration:
    """
    Draw a configuration of n disjoint conics, deterministically per seed.

    Args:
        n: Number of conics (>= 1)
        mode: GENERAL (no three q points collinear) or COLLINEAR (all q
            points on one random line)
        twistor: If True every member is a twistor fiber (m = conj q)
        seed: Integer seed
        settings: Coordinate pool and retry bound; defaults to get_settings()

    Returns:
        Configuration: classified configuration

    Raises:
        ValueError: If n < 1
        ExhaustedRetries: If the rejection sampler runs out of draws

    Examples:
        >>> random_config(3, ConfigMode.GENERAL, True, seed=9).category()
        'T*(3)'
        >>> random_config(4, ConfigMode.COLLINEAR, True, seed=7).category()
        'T(4)-'
    """
    if n < 1:
        raise ValueError(f"A configuration needs at least one conic, got n={n}")
    settings = settings or get_settings()
    mode = ConfigMode(mode)
    rng = random.Random(seed)

    line: Optional[Tuple] = None
    if mode is ConfigMode.COLLINEAR:
        line = plane_basis(random_point(rng, settings).coords)

    conics: List[Conic] = []
    draws = 0
    while len(conics) < n:
        draws += 1
        if draws > settings.max_sampling_retries:
            logger.warning("seed %d: gave up after %d draws (%d of %d conics)",
                           seed, draws - 1, len(conics), n)
            raise ExhaustedRetries(
                f"Could not place {n} conics in {mode.value} position (seed {seed})"
            )

        if line is not None:
            s, t = random_gaussrat(rng, settings), random_gaussrat(rng, settings)
            coords = [s * u + t * v for u, v in zip(*line)]
            if is_zero_vector(coords):
                continue
            q = ProjPoint(coords)
        else:
            q = random_point(rng, settings)
        if any(q == c.q for c in conics):
            continue

        candidate = random_conic(rng, settings, twistor, q=q)
        if not all(are_disjoint(candidate, c) for c in conics):
            logger.warning("seed %d: rejected draw %d, meets an earlier conic", seed, draws)
            continue
        if mode is ConfigMode.GENERAL and any(
            not det3(a.q.coords, b.q.coords, candidate.q.coords)
            for a, b in combinations(conics, 2)
        ):
            logger.warning("seed %d: rejected draw %d, collinear triple", seed, draws)
            continue
        conics.append(candidate)

    return classify_config(conics)


def circle_point(t: Fraction) -> GaussRat:
    """The rational point ((1 - t^2) + 2t i) / (1 + t^2) of the unit circle."""
    t = Fraction(t)
    denominator = 1 + t * t
    return GaussRat((1 - t * t) / denominator, 2 * t / denominator)


def circle_surface(radius: Fraction) -> BiForm:
    """The j-invariant (1,1) form p1*l1 - radius^2 * p2*l2."""
    return BiForm((1, 1), {(0, 1, 0, 0, 1, 0): 1, (0, 0, 1, 0, 0, 1): -(radius * radius)})


@dataclass(frozen=True)
class CircleFamily:
    """
    Twistor fibers over [0:1:c], the first n_on with |c| = radius.

    The first n_on fibers lie on surface; the rest lie on the same line
    q0 = 0 but off the surface.
    """

    config: Configuration
    surface: BiForm
    radius: Fraction
    n_on: int

    @property
    def on_circle(self) -> Tuple[Conic, ...]:
        return self.config.conics[:self.n_on]

    @property
    def off_circle(self) -> Tuple[Conic, ...]:
        return self.config.conics[self.n_on:]


def circle_family_config(n_on: int, n_off: int, seed: int,
                         settings: Optional[FlagTwistSettings] = None) -> CircleFamily:
    """
    Place n_on twistor fibers on a smooth surface p1*l1 - r^2*p2*l2 and
    n_off more on the line q0 = 0 away from it.

    Raises:
        ValueError: If n_on + n_off < 1
        ExhaustedRetries: If distinct points cannot be drawn
    """
    if n_on < 0 or n_off < 0 or n_on + n_off < 1:
        raise ValueError(f"Need a nonempty family, got n_on={n_on}, n_off={n_off}")
    settings = settings or get_settings()
    rng = random.Random(seed)
    radius = Fraction(rng.randint(1, 5), rng.randint(1, 5))
    radius_squared = radius * radius

    values: List[GaussRat] = []
    draws = 0
    while len(values) < n_on + n_off:
        draws += 1
        if draws > settings.max_sampling_retries:
            raise ExhaustedRetries(f"Could not draw a circle family (seed {seed})")
        if len(values) < n_on:
            c = circle_point(random_fraction(rng, settings)) * radius
        else:
            c = random_gaussrat(rng, settings)
            if c.norm() == radius_squared:
                continue
        if c in values:
            continue
        values.append(c)

    conics = [Conic(ProjPoint([0, 1, c]), ProjPoint([0, 1, c.conj()])) for c in values]
    return CircleFamily(classify_config(conics), circle_surface(radius), radius, n_on)
