"""
Surface Analysis - flagtwist

Reducibility, containment and singularity tests for surfaces of bidegree
(1,d) on the flag threefold.

Writing F = sum p_i A_i(l), the vertical vector C(l) = A(l) x l does not
depend on the representative of F modulo Phi. Its gcd g is the vertical
divisor: F = g * (p . D) modulo Phi for some D, so F is reducible exactly
when g is not constant.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from src.bipoly import BiForm, CurveParam, gradient6, multiply, normal_form, span_contains
from src.config_generator import random_vector
from src.curves import Conic, FlagCurve
from src.errors import (
    BadParams,
    ExhaustedRetries,
    HypothesisFailed,
    NotOnSurface,
    VerticalVectorZero,
    ZeroOnFlag,
)
from src.exact_matrix import ExactMatrix
from src.flag_geometry import Configuration, FlagPoint
from src.homog_poly import HomogPoly3, gcd_homog
from src.linear_system import LinearSystem, divides
from src.proj_point import ProjPoint, cross, is_zero_vector
from src.settings import FlagTwistSettings, get_settings

logger = logging.getLogger(__name__)

CurveLike = Union[FlagCurve, CurveParam]


def _reduced(form: BiForm) -> BiForm:
    reduced = normal_form(form)
    if reduced.is_zero():
        raise ZeroOnFlag(f"{form} is a multiple of the flag form")
    return reduced


def _as_param(curve: CurveLike) -> CurveParam:
    return curve if isinstance(curve, CurveParam) else curve.parametrization()


# ══════════════════════════════════════════════════════════════════════
# VERTICAL CRITERION
# ══════════════════════════════════════════════════════════════════════

def vertical_vector(form: BiForm) -> tuple:
    """
    The three degree d+1 components of A(l) x l for F = sum p_i A_i(l).

    Raises:
        ZeroOnFlag: If form is a multiple of Phi
        BidegreeMismatch: If form does not have p-degree 1
    """
    a0, a1, a2 = _reduced(form).p_coefficients()
    l0, l1, l2 = (HomogPoly3.variable(i) for i in range(3))
    return (a1 * l2 - a2 * l1, a2 * l0 - a0 * l2, a0 * l1 - a1 * l0)


def vertical_gcd(form: BiForm) -> HomogPoly3:
    """
    Monic gcd of the vertical vector of a (1,d) form.

    Raises:
        ZeroOnFlag: If form is a multiple of Phi
        VerticalVectorZero: If the vertical vector vanishes identically

    Examples:
        p1*l1 - p2*l2 has vertical vector (2 l1 l2, -l0 l2, -l0 l1), gcd 1.
    """
    components = vertical_vector(form)
    if all(c.is_zero() for c in components):
        raise VerticalVectorZero(f"Vertical vector of {form} is zero")
    return gcd_homog(components)


def is_irreducible(form: BiForm) -> bool:
    """True iff the (1,d) surface has no vertical component."""
    return vertical_gcd(form).is_constant()


def vertical_multiplicity(form: BiForm, divisor: HomogPoly3) -> int:
    """Largest e with divisor^e dividing form modulo Phi (0 for constants)."""
    if divisor.is_constant():
        return 0
    b = form.bidegree[1]
    factor = BiForm.from_l_poly(divisor)
    power = factor
    e = 0
    while power.bidegree[1] <= b and divides(power, form) is not None:
        e += 1
        power = multiply(power, factor)
    return e


# ══════════════════════════════════════════════════════════════════════
# CONTAINMENT
# ══════════════════════════════════════════════════════════════════════

def contains_curve(form: BiForm, curve: CurveLike) -> bool:
    """Exact containment: the restriction along the curve is identically zero."""
    return form.restrict(_as_param(curve)).is_zero()


def contains_conic(form: BiForm, conic: Conic) -> bool:
    return contains_curve(form, conic.parametrization())


def off_locus(point: FlagPoint, curves: Iterable[FlagCurve]) -> bool:
    """True iff point lies on none of the curves."""
    return not any(c.contains_point(point.p, point.l) for c in curves)


# ══════════════════════════════════════════════════════════════════════
# SINGULARITIES
# ══════════════════════════════════════════════════════════════════════

def is_singular_at(form: BiForm, point: FlagPoint) -> bool:
    """
    True iff the surface {form = 0} in F is singular at point.

    That happens iff the gradients of form and Phi at point span at most a
    line.

    Raises:
        NotOnSurface: If form does not vanish at point

    Examples:
        p1*l1 - p2*l2 at ([0:1:1], [1:0:0]) has gradient rows
        (0,0,0,0,1,-1) and (1,0,0,0,1,1): rank 2, smooth.
    """
    p, l = point.p, point.l
    if form.evaluate(p, l):
        raise NotOnSurface(f"{point!r} is not on {form}")
    row_f = [g.evaluate(p, l) for g in gradient6(form)]
    row_phi = list(l.coords) + list(p.coords)
    return ExactMatrix([row_f, row_phi]).rank() <= 1


def singular_along(form: BiForm, curve: CurveLike, k: int) -> bool:
    """
    Singularity at k distinct parameter values [1:j], j = 0..k-1, of a curve
    lying in the surface.

    Raises:
        NotOnSurface: If the curve is not contained in the surface
    """
    gamma = _as_param(curve)
    if not contains_curve(form, gamma):
        raise NotOnSurface(f"Curve {curve!r} is not contained in {form}")
    for j in range(k):
        p, l = gamma.point_at(1, j)
        if not is_singular_at(form, FlagPoint(p, l)):
            return False
    return True


def surface_point_over(form: BiForm, l: Sequence) -> Optional[FlagPoint]:
    """
    The point (l x A(l), l) of the surface, or None when A(l) is parallel to l.
    """
    a = [poly.evaluate(l) for poly in _reduced(form).p_coefficients()]
    p = cross(l, a)
    if is_zero_vector(p):
        return None
    return FlagPoint(ProjPoint(p), ProjPoint(l))


def draw_surface_point(form: BiForm, rng: random.Random,
                       settings: Optional[FlagTwistSettings] = None) -> FlagPoint:
    """
    Raises:
        ExhaustedRetries: If every drawn l gives A(l) parallel to l
    """
    settings = settings or get_settings()
    for _ in range(settings.max_sampling_retries):
        l = random_vector(rng, settings)
        if is_zero_vector(l):
            continue
        point = surface_point_over(form, l)
        if point is not None:
            return point
    raise ExhaustedRetries(f"Could not sample a point on {form}")


def sample_surface_point(form: BiForm, seed: int,
                         settings: Optional[FlagTwistSettings] = None) -> FlagPoint:
    """A seeded random point of the (1,d) surface {form = 0}."""
    return draw_surface_point(form, random.Random(seed), settings)


# ══════════════════════════════════════════════════════════════════════
# REDUCIBLE MEMBERS OF A PENCIL
# ══════════════════════════════════════════════════════════════════════

def reducible_members(config: Configuration, bidegree: Tuple[int, int] = (1, 2)) -> List[BiForm]:
    """
    The four products M_C * Y_C for a collinear twistor 4-tuple.

    M_C is the unique (1,1) form through the other three fibers and Y_C the
    (0,1) form q_C . l through C. Every product is checked to lie in the
    span of system_basis(config, (1,2)).

    Raises:
        BadParams: If bidegree is not (1,2)
        HypothesisFailed: If config is not a collinear twistor 4-tuple off
            every (1,1) surface, some M_C is not unique, or a product falls
            outside the pencil
    """
    if tuple(bidegree) != (1, 2):
        raise BadParams(f"Reducible members are built in bidegree (1,2), got {bidegree}")
    if config.n != 4 or not config.all_twistor or config.collinear_witness is None:
        raise HypothesisFailed(f"{config!r} is not a collinear twistor 4-tuple")
    if LinearSystem(config, (1, 1)).h0 != 0:
        raise HypothesisFailed(f"{config!r} lies on a (1,1) surface")
    pencil = LinearSystem(config, (1, 2)).basis
    products = []
    for index, conic in enumerate(config):
        rest = LinearSystem(config.without(index), (1, 1))
        if rest.h0 != 1:
            raise HypothesisFailed(
                f"Expected one (1,1) form through 3 fibers, found h0={rest.h0}"
            )
        product = normal_form(multiply(rest.basis[0], BiForm.l_linear(conic.q.coords)))
        if not span_contains(pencil, product):
            raise HypothesisFailed(f"Product for conic {index} is not in |I_A(1,2)|")
        products.append(product)
    return products


# ══════════════════════════════════════════════════════════════════════
# FULL ANALYSIS
# ══════════════════════════════════════════════════════════════════════

@dataclass
class SurfaceAnalysis:
    """
    Everything flagtwist can say about one (1,d) surface.

    Smoothness is never certified: singular_points_found lists the singular
    points seen among points_checked samples.
    """

    form: BiForm
    vertical_divisor: HomogPoly3
    irreducible: bool
    vertical_multiplicity: int
    divisor_confirmed: bool
    contained_conics: List[int] = field(default_factory=list)
    singular_points_found: List[FlagPoint] = field(default_factory=list)
    points_checked: int = 0

    def to_record(self) -> dict:
        return {
            "form": str(self.form),
            "bidegree": list(self.form.bidegree),
            "vertical_divisor": str(self.vertical_divisor),
            "irreducible": self.irreducible,
            "vertical_multiplicity": self.vertical_multiplicity,
            "divisor_confirmed": self.divisor_confirmed,
            "contained_conics": list(self.contained_conics),
            "singular_points_found": [x.to_record() for x in self.singular_points_found],
            "points_checked": self.points_checked,
        }


def analyze_surface(form: BiForm, config: Optional[Configuration] = None, seed: int = 0,
                    settings: Optional[FlagTwistSettings] = None) -> SurfaceAnalysis:
    """
    Vertical divisor, containment of the configuration's conics and a
    sampled singularity search (random surface points plus points on every
    contained conic).

    Raises:
        ZeroOnFlag: If form is a multiple of Phi
    """
    settings = settings or get_settings()
    divisor = vertical_gcd(form)
    irreducible = divisor.is_constant()
    confirmed = irreducible or divides(BiForm.from_l_poly(divisor), form) is not None
    analysis = SurfaceAnalysis(
        form=form,
        vertical_divisor=divisor,
        irreducible=irreducible,
        vertical_multiplicity=vertical_multiplicity(form, divisor),
        divisor_confirmed=confirmed,
    )

    rng = random.Random(seed)
    candidates: List[FlagPoint] = []
    for _ in range(settings.smoothness_samples):
        candidates.append(draw_surface_point(form, rng, settings))
    for index, conic in enumerate(config or ()):
        if contains_conic(form, conic):
            analysis.contained_conics.append(index)
            gamma = conic.parametrization()
            for j in range(settings.fiber_samples):
                candidates.append(FlagPoint(*gamma.point_at(1, j)))

    for point in candidates:
        if is_singular_at(form, point):
            analysis.singular_points_found.append(point)
    analysis.points_checked = len(candidates)
    logger.info("analyzed %s: irreducible=%s, %d/%d sampled points singular",
                form, irreducible, len(analysis.singular_points_found), len(candidates))
    return analysis
