"""
Scenario Registry - flagtwist

Each scenario draws a seeded instance, computes a dictionary of exact
quantities (dimensions, flags, counts) and states its claim as a list of
declarative expectations over those quantities. A trial raises
HypothesisFailed (or ExhaustedRetries) when the drawn instance misses an
open hypothesis of the claim; the harness then reseeds.
"""

import random
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict

from src.bipoly import BiForm, j_image, normal_form, normal_form_monomials
from src.config_generator import (
    ConfigMode,
    circle_family_config,
    circle_point,
    circle_surface,
    random_conic,
    random_config,
    random_flag_point,
    random_fraction,
    random_gaussrat,
    random_meeting_pair,
    random_point,
)
from src.curves import FiberCurve, FiberKind
from src.errors import BadParams, HypothesisFailed, UnknownScenario
from src.flag_geometry import (
    Configuration,
    are_disjoint,
    connecting_curves,
    incidence_common_point,
    make_twistor_fiber,
    twistor_project,
)
from src.formulas import (
    collinear_h1_bound,
    containment_forced,
    flag_h0,
    general_h0,
    pullback_h0,
    pullback_h1,
    surface_h0_01,
    surface_h0_10,
)
from src.gaussrat import GaussRat, I
from src.linear_system import LinearSystem, complete_intersection_h0, divides, random_member
from src.proj_point import ProjPoint
from src.settings import FlagTwistSettings
from src.surface_analysis import (
    contains_conic,
    contains_curve,
    draw_surface_point,
    is_irreducible,
    is_singular_at,
    off_locus,
    reducible_members,
    singular_along,
)
from src.validation import validate_scenario_params


Quantity = Union[bool, int, str]
Quantities = Dict[str, Quantity]


class ScenarioParams(BaseModel):
    """Resolved scenario parameters."""

    model_config = ConfigDict(frozen=True)

    d: int
    n: int
    trials: int


TrialFn = Callable[[ScenarioParams, int, FlagTwistSettings], Quantities]


# ══════════════════════════════════════════════════════════════════════
# EXPECTATIONS
# ══════════════════════════════════════════════════════════════════════

class Op(str, Enum):
    EQ = "=="
    NE = "!="
    LE = "<="
    GE = ">="
    LT = "<"
    GT = ">"


_COMPARE = {
    Op.EQ: lambda x, y: x == y,
    Op.NE: lambda x, y: x != y,
    Op.LE: lambda x, y: x <= y,
    Op.GE: lambda x, y: x >= y,
    Op.LT: lambda x, y: x < y,
    Op.GT: lambda x, y: x > y,
}


@dataclass(frozen=True)
class Ref:
    """Another quantity of the same trial, used as the expected value."""

    quantity: str

    def __str__(self) -> str:
        return self.quantity


@dataclass(frozen=True)
class Expectation:
    """quantity <op> expected, where expected is a literal or a Ref."""

    quantity: str
    op: Op
    expected: Union[Quantity, Ref]

    def resolve(self, quantities: Quantities) -> Quantity:
        if isinstance(self.expected, Ref):
            return quantities[self.expected.quantity]
        return self.expected

    def holds(self, quantities: Quantities) -> bool:
        """
        Raises:
            KeyError: If the trial did not compute a referenced quantity
        """
        return _COMPARE[self.op](quantities[self.quantity], self.resolve(quantities))

    def describe(self) -> str:
        return f"{self.quantity} {self.op.value} {self.expected}"


def expect(quantity: str, op: str, expected: Union[Quantity, Ref]) -> Expectation:
    return Expectation(quantity, Op(op), expected)


# ══════════════════════════════════════════════════════════════════════
# SCENARIOS
# ══════════════════════════════════════════════════════════════════════

Constraint = Tuple[Callable[[int, int], bool], str]


@dataclass(frozen=True)
class Scenario:
    """
    A named claim with its trial function and expectations.

    Attributes:
        name (str): Registry key
        claim (str): Plain-language statement being checked
        trial (callable): (params, seed, settings) -> quantities
        expectations (tuple): Every expectation must hold for a pass
        default_d, default_n, default_trials (int): Parameter defaults
        fixed_d (int | None): d is not adjustable when set
        n_rule (callable | None): n as a function of d; n is not adjustable
        constraints (tuple): (predicate(d, n), message) pairs
        notes (tuple): Remarks copied into every report
    """

    name: str
    claim: str
    trial: TrialFn
    expectations: Tuple[Expectation, ...]
    default_d: int = 2
    default_n: int = 2
    default_trials: int = 20
    fixed_d: Optional[int] = None
    n_rule: Optional[Callable[[int], int]] = None
    constraints: Tuple[Constraint, ...] = ()
    notes: Tuple[str, ...] = ()

    def resolve_params(self, d: Optional[int] = None, n: Optional[int] = None,
                       trials: Optional[int] = None,
                       settings: Optional[FlagTwistSettings] = None) -> ScenarioParams:
        """
        Fill defaults and check ranges and scenario constraints.

        Raises:
            BadParams: Listing every violated range or constraint
        """
        if self.fixed_d is not None:
            if d is not None and d != self.fixed_d:
                raise BadParams(f"{self.name} runs at d={self.fixed_d}, got d={d}")
            d = self.fixed_d
        d = self.default_d if d is None else d
        if self.n_rule is not None:
            derived = self.n_rule(d)
            if n is not None and n != derived:
                raise BadParams(f"{self.name} fixes n={derived} for d={d}, got n={n}")
            n = derived
        n = self.default_n if n is None else n
        trials = self.default_trials if trials is None else trials

        _, errors = validate_scenario_params(d, n, trials, settings=settings)
        if not errors:
            errors = [f"{message} (d={d}, n={n})"
                      for check, message in self.constraints if not check(d, n)]
        if errors:
            raise BadParams(f"{self.name}: " + "; ".join(errors))
        return ScenarioParams(d=d, n=n, trials=trials)

    def evaluate(self, quantities: Quantities) -> List[Tuple[Expectation, Quantity, bool]]:
        """(expectation, actual, holds) for every expectation."""
        return [(e, quantities[e.quantity], e.holds(quantities)) for e in self.expectations]


# ══════════════════════════════════════════════════════════════════════
# TRIAL HELPERS
# ══════════════════════════════════════════════════════════════════════

def _sub_seed(seed: int, k: int) -> int:
    return (seed * 1000003 + k) % 2 ** 64


def _twistor(n: int, seed: int, settings: FlagTwistSettings,
             mode: ConfigMode = ConfigMode.GENERAL) -> Configuration:
    return random_config(n, mode, True, seed, settings)


def _off_11(config: Configuration) -> None:
    if LinearSystem(config, (1, 1)).h0 != 0:
        raise HypothesisFailed(f"{config!r} lies on a (1,1) surface")


def _all_contain(forms: List[BiForm], curves) -> bool:
    return all(contains_curve(f, c) for f in forms for c in curves)


# ══════════════════════════════════════════════════════════════════════
# TRIALS
# ══════════════════════════════════════════════════════════════════════

def _eqdims(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    empty = Configuration()
    mismatches = 0
    for a in range(params.d + 1):
        for b in range(params.d + 1):
            if (a, b) == (0, 0):
                continue
            expected = flag_h0(a, b)
            if LinearSystem(empty, (a, b)).h0 != expected or len(normal_form_monomials(a, b)) != expected:
                mismatches += 1

    rng = random.Random(seed)
    x = BiForm.p_linear(random_point(rng, settings).coords)
    y = BiForm.l_linear(random_point(rng, settings).coords)
    surface_mismatches = 0
    for a in range(3):
        for b in range(3):
            if (a, b) == (0, 0):
                continue
            surface_mismatches += complete_intersection_h0(x, (a, b)) != surface_h0_10(a, b)
            surface_mismatches += complete_intersection_h0(y, (a, b)) != surface_h0_01(a, b)

    return {
        "mismatches": mismatches,
        "surface_mismatches": surface_mismatches,
        "h0_11": LinearSystem(empty, (1, 1)).h0,
        "h0_12": LinearSystem(empty, (1, 2)).h0,
        "h0_13": LinearSystem(empty, (1, 3)).h0,
    }


def _c02(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    d, n = params.d, params.n
    config = random_config(n, ConfigMode.GENERAL, False, seed, settings)
    system = LinearSystem(config, (0, d))
    return {
        "h0": system.h0,
        "h1": system.h1,
        "expected_h0": pullback_h0(n, d),
        "expected_h1": pullback_h1(n, d),
        "h0_10": LinearSystem(config, (1, 0)).h0,
        "h0_01": LinearSystem(config, (0, 1)).h0,
        "expected_single": 1 if n == 1 else 0,
    }


def _twistor_dims(mode: ConfigMode) -> TrialFn:
    def trial(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
        d, n = params.d, params.n
        system = LinearSystem(_twistor(n, seed, settings, mode), (1, d))
        return {
            "h0": system.h0,
            "h1": system.h1,
            "chi": system.chi,
            "expected_h0": general_h0(n, d),
            "bound": collinear_h1_bound(n, d),
        }
    return trial


def _u5_exist(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(params.n, seed, settings)
    system = LinearSystem(config, (1, params.d))
    member = random_member(system.basis, _sub_seed(seed, 1), settings)
    return {
        "h0": system.h0,
        "irreducible": is_irreducible(member),
        "contains_all": all(contains_conic(member, c) for c in config),
    }


def _nok1(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    d = params.d
    config = _twistor(params.n, seed, settings, ConfigMode.COLLINEAR)
    if config.n >= 4:
        _off_11(config)
    system = LinearSystem(config, (1, d))
    irreducible = system.h0 > 0 and is_irreducible(
        random_member(system.basis, _sub_seed(seed, 1), settings)
    )
    return {"h0": system.h0, "d": d, "h0_equals_d": system.h0 == d, "irreducible": irreducible}


def _remmmm(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(3, seed, settings, ConfigMode.COLLINEAR)
    system = LinearSystem(config, (1, 1))
    quantities: Quantities = {
        "h0": system.h0,
        "h1": system.h1,
        "forced": containment_forced((1, 1), 3, (1, 1)),
        "irreducible": False,
        "j_invariant": False,
    }
    if system.h0:
        member = normal_form(system.basis[0])
        quantities["irreducible"] = is_irreducible(member)
        quantities["j_invariant"] = normal_form(j_image(member)).proportional_to(member)
    return quantities


def _n3(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(3, seed, settings, ConfigMode.COLLINEAR)
    system = LinearSystem(config, (1, 2))
    witness = config.collinear_witness
    basis = system.basis
    member = random_member(basis, _sub_seed(seed, 1), settings)
    return {
        "h0": system.h0,
        "h1": system.h1,
        "irreducible": is_irreducible(member),
        "basis_contains_L": _all_contain(basis, [witness]),
        "basis_contains_R": _all_contain(basis, [witness.j_image()]),
    }


def _ee1(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(2, seed, settings)
    system = LinearSystem(config, (1, 1))
    basis = system.basis
    curves = list(config) + list(connecting_curves(config[0], config[1]))

    rng = random.Random(_sub_seed(seed, 1))
    checked = misses = 0
    for _ in range(settings.max_sampling_retries):
        if checked == settings.off_locus_points:
            break
        x = random_flag_point(rng, settings)
        if not off_locus(x, curves):
            continue
        checked += 1
        if all(not f.evaluate(x.p, x.l) for f in basis):
            misses += 1
    return {
        "h0": system.h0,
        "h1": system.h1,
        "contains_locus": _all_contain(basis, curves),
        "off_locus_checked": checked,
        "off_locus_misses": misses,
        "required_points": settings.off_locus_points,
    }


def _ee2(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(2, seed, settings)
    system = LinearSystem(config, (1, 2))
    member = random_member(system.basis, _sub_seed(seed, 1), settings)
    rng = random.Random(_sub_seed(seed, 2))
    singular = 0
    for _ in range(settings.smoothness_samples):
        singular += is_singular_at(member, draw_surface_point(member, rng, settings))
    fiber_l, _ = connecting_curves(config[0], config[1])
    return {
        "h0": system.h0,
        "h1": system.h1,
        "singular_found": singular,
        "points_checked": settings.smoothness_samples,
        "basis_contains_L": _all_contain(system.basis, [fiber_l]),
    }


def _n21(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(3, seed, settings)
    _off_11(config)
    system = LinearSystem(config, (1, 2))
    basis = system.basis
    member = random_member(basis, _sub_seed(seed, 1), settings)
    fibers = [connecting_curves(a, b)[0] for a, b in combinations(config, 2)]
    return {
        "h0": system.h0,
        "h1": system.h1,
        "irreducible": is_irreducible(member),
        "connecting_contained": sum(_all_contain(basis, [f]) for f in fibers),
    }


def _bo2_aaa1(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    config = _twistor(4, seed, settings, ConfigMode.COLLINEAR)
    products = reducible_members(config)
    system = LinearSystem(config, (1, 2))
    member = random_member(system.basis, _sub_seed(seed, 1), settings)
    tested = [member, *products]
    witness = config.collinear_witness
    return {
        "h0": system.h0,
        "reducible_count": len(products),
        "pairwise_non_proportional": all(
            not f.proportional_to(g) for f, g in combinations(products, 2)
        ),
        "irreducible_products": sum(is_irreducible(f) for f in products),
        "member_irreducible": is_irreducible(member),
        "tested_members": len(tested),
        "singular_along_L": sum(singular_along(f, witness, settings.fiber_samples) for f in tested),
    }


def _bo5(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    family = circle_family_config(4, params.d - 1, seed, settings)
    system = LinearSystem(family.config, (1, params.d))
    if system.h0 == 0:
        raise HypothesisFailed(f"{family.config!r} lies on no (1,{params.d}) surface")
    member = random_member(system.basis, _sub_seed(seed, 1), settings)

    off_factors = [BiForm.l_linear(c.q.coords) for c in family.off_circle]
    cofactor: Optional[BiForm] = member
    for factor in off_factors:
        cofactor = divides(factor, cofactor)
        if cofactor is None:
            break
    cofactor_conics = 0
    if cofactor is not None and not normal_form(cofactor).is_zero():
        cofactor_conics = sum(contains_conic(cofactor, c) for c in family.config)
    return {
        "h0": system.h0,
        "member_irreducible": is_irreducible(member),
        "off_factors_divide": all(divides(y, member) is not None for y in off_factors),
        "cofactor_conics": cofactor_conics,
    }


_SEARCH_DRAWS = ("general", "collinear", "circle")


def _irreducible_search(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    d, n = params.d, params.n
    draw = _SEARCH_DRAWS[seed % 3]
    if draw == "general":
        config = _twistor(n, seed, settings)
    elif draw == "collinear":
        config = _twistor(n, seed, settings, ConfigMode.COLLINEAR)
    else:
        config = circle_family_config(4, n - 4, seed, settings).config
    system = LinearSystem(config, (1, d))
    found = system.h0 > 0 and is_irreducible(
        random_member(system.basis, _sub_seed(seed, 1), settings)
    )
    return {
        "draw": draw,
        "h0": system.h0,
        "irreducible_found": int(found),
        "irreducible_off_collinear": int(found and draw != "collinear"),
        "collinear_counterexample": int(found and draw == "collinear"),
    }


_UNIT_CIRCLE_VALUES = (
    GaussRat(1), GaussRat(-1), I, -I, GaussRat(Fraction(3, 5), Fraction(4, 5)),
)


def _primo_caso(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    surface = circle_surface(Fraction(1))
    listed = sum(
        contains_conic(surface, make_twistor_fiber(ProjPoint([0, 1, w])))
        for w in _UNIT_CIRCLE_VALUES
    )
    coordinate = sum(
        contains_curve(surface, FiberCurve(kind, ProjPoint.unit(i)))
        for kind in FiberKind for i in range(3)
    )

    rng = random.Random(seed)
    on_circle = make_twistor_fiber(ProjPoint([0, 1, circle_point(random_fraction(rng, settings))]))
    c = random_gaussrat(rng, settings)
    while c.norm() == 1:
        c = random_gaussrat(rng, settings)
    off_circle = make_twistor_fiber(ProjPoint([0, 1, c]))

    return {
        "listed_fibers": listed,
        "coordinate_fibers": coordinate,
        "circle_fiber_contained": contains_conic(surface, on_circle),
        "off_circle_contained": contains_conic(surface, off_circle),
        "j_invariant": normal_form(j_image(surface)).proportional_to(normal_form(surface)),
        "irreducible": is_irreducible(surface),
        "general_triple_h0": LinearSystem(_twistor(3, _sub_seed(seed, 1), settings), (1, 1)).h0,
    }


_FIBER_PAIRS = 200


def _fiber_consistency(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    rng = random.Random(seed)
    off_fiber = j_off_fiber = j_moved = disagree = off_common = missed = meeting = 0
    for index in range(_FIBER_PAIRS):
        x = random_flag_point(rng, settings)
        q = twistor_project(x.p, x.l)
        fiber = make_twistor_fiber(q)
        jx = x.j()
        off_fiber += not fiber.contains_point(x.p, x.l)
        j_off_fiber += not fiber.contains_point(jx.p, jx.l)
        j_moved += twistor_project(jx.p, jx.l) != q

        if index % 2:
            meeting += 1
            c1, c2, _ = random_meeting_pair(rng, settings)
        else:
            c1 = random_conic(rng, settings, twistor=False)
            c2 = random_conic(rng, settings, twistor=False)
            while c2 == c1:
                c2 = random_conic(rng, settings, twistor=False)
        disjoint = are_disjoint(c1, c2)
        common = incidence_common_point(c1, c2)
        disagree += disjoint != (common is None)
        if common is not None:
            off_common += not (
                c1.contains_point(common.p, common.l) and c2.contains_point(common.p, common.l)
            )
        missed += bool(index % 2) and disjoint

    return {
        "pairs_checked": _FIBER_PAIRS,
        "meeting_pairs": meeting,
        "x_off_fiber": off_fiber,
        "jx_off_fiber": j_off_fiber,
        "projection_moved_by_j": j_moved,
        "criteria_disagree": disagree,
        "common_point_off_pair": off_common,
        "meeting_pair_missed": missed,
    }


def _aaa1_ledger(params: ScenarioParams, seed: int, settings: FlagTwistSettings) -> Quantities:
    system = LinearSystem(_twistor(params.n, seed, settings), (1, params.d))
    return {"h0": system.h0, "h1": system.h1, "chi": system.chi, "claimed_h1": 0}


# ══════════════════════════════════════════════════════════════════════
# REGISTRY
# ══════════════════════════════════════════════════════════════════════

def _n_le_d1(d: int, n: int) -> bool:
    return n <= d + 1


_SCENARIOS = (
    Scenario(
        "eqdims",
        "h0(O_F(a,b)) = (a+1)(b+1)(a+b+2)/2 for 0 <= a,b <= d, and the (1,0)/(0,1) "
        "surfaces carry a(b+1)+C(b+2,2) / b(a+1)+C(a+2,2) sections",
        _eqdims,
        (expect("mismatches", "==", 0), expect("surface_mismatches", "==", 0),
         expect("h0_11", "==", 8), expect("h0_12", "==", 15), expect("h0_13", "==", 24)),
        default_d=4, default_trials=3,
    ),
    Scenario(
        "c02",
        "n disjoint conics impose h0(I_A(0,d)) = C(d-n+2,2) for n <= d+1, and a (1,0) or "
        "(0,1) surface holds at most one of them",
        _c02,
        (expect("h0", "==", Ref("expected_h0")), expect("h1", "==", Ref("expected_h1")),
         expect("h0_10", "==", Ref("expected_single")), expect("h0_01", "==", Ref("expected_single"))),
        default_d=2, default_n=2,
    ),
    Scenario(
        "cor1",
        "n <= d+1 general twistor fibers impose independent conditions: "
        "h0(I_A(1,d)) = (d+1)(d+3) - n(d+2)",
        _twistor_dims(ConfigMode.GENERAL),
        (expect("h1", "==", 0), expect("h0", "==", Ref("expected_h0"))),
        default_d=2, default_n=2,
        constraints=((_n_le_d1, "n must be at most d+1"),),
    ),
    Scenario(
        "c01-star",
        "d+1 twistor fibers with no three collinear have h1(I_A(1,d)) = 0",
        _twistor_dims(ConfigMode.GENERAL),
        (expect("h1", "==", 0), expect("h0", "==", Ref("expected_h0"))),
        n_rule=lambda d: d + 1,
    ),
    Scenario(
        "c01-collinear",
        "3 <= n <= d+1 collinear twistor fibers have h1(I_A(1,d)) > 0",
        _twistor_dims(ConfigMode.COLLINEAR),
        (expect("h1", ">", 0),),
        default_d=2, default_n=3,
        constraints=((lambda d, n: 3 <= n <= d + 1, "n must satisfy 3 <= n <= d+1"),),
    ),
    Scenario(
        "ii1",
        "d+2 general twistor fibers have h1(I_A(1,d)) <= 1 with chi = -1",
        _twistor_dims(ConfigMode.GENERAL),
        (expect("h1", "<=", 1), expect("chi", "==", -1)),
        n_rule=lambda d: d + 2,
    ),
    Scenario(
        "u6",
        "no surface of bidegree (1,d) contains d+2 general twistor fibers",
        _twistor_dims(ConfigMode.GENERAL),
        (expect("h0", "==", 0),),
        n_rule=lambda d: d + 2,
    ),
    Scenario(
        "u5-exist",
        "an irreducible surface of bidegree (1,d) contains n <= d+1 general twistor fibers",
        _u5_exist,
        (expect("irreducible", "==", True), expect("contains_all", "==", True)),
        default_d=2, default_n=3,
        constraints=((_n_le_d1, "n must be at most d+1"),),
    ),
    Scenario(
        "no2",
        "n collinear twistor fibers have h1(I_A(1,d)) >= n - 2 + max(0, n - (d+1))",
        _twistor_dims(ConfigMode.COLLINEAR),
        (expect("h1", ">=", Ref("bound")),),
        default_d=2, default_n=4,
        constraints=((lambda d, n: n >= 3, "n must be at least 3"),),
    ),
    Scenario(
        "nok1",
        "d+2 collinear twistor fibers off every (1,1) surface lie on at least a d-dimensional "
        "system of (1,d) surfaces whose general member is irreducible",
        _nok1,
        (expect("h0", ">=", Ref("d")), expect("irreducible", "==", True)),
        n_rule=lambda d: d + 2,
        constraints=((lambda d, n: d >= 2, "d must be at least 2"),),
        notes=("h0_equals_d reports whether the bound is attained; it is not an expectation",),
    ),
    Scenario(
        "remmmm",
        "three collinear twistor fibers lie on a unique (1,1) surface, irreducible and "
        "j-invariant, with h1(I_A(1,1)) = 2",
        _remmmm,
        (expect("h0", "==", 1), expect("h1", "==", 2), expect("irreducible", "==", True),
         expect("j_invariant", "==", True), expect("forced", "==", True)),
        fixed_d=1, n_rule=lambda d: 3,
    ),
    Scenario(
        "n3",
        "three collinear twistor fibers have h1(I_A(1,2)) = 1 and every (1,2) surface through "
        "them contains the fibers L and R meeting all three",
        _n3,
        (expect("h1", "==", 1), expect("h0", "==", 4), expect("irreducible", "==", True),
         expect("basis_contains_L", "==", True), expect("basis_contains_R", "==", True)),
        fixed_d=2, n_rule=lambda d: 3,
    ),
    Scenario(
        "ee1",
        "the base locus of the (1,1) surfaces through two twistor fibers is the fibers "
        "together with the connecting curves L and R",
        _ee1,
        (expect("h0", "==", 2), expect("contains_locus", "==", True),
         expect("off_locus_checked", "==", Ref("required_points")),
         expect("off_locus_misses", "==", 0)),
        fixed_d=1, n_rule=lambda d: 2,
    ),
    Scenario(
        "ee2",
        "two twistor fibers have h0(I_A(1,2)) = 7, h1 = 0, the connecting fiber L in the base "
        "locus and a smooth general member (sampled)",
        _ee2,
        (expect("h0", "==", 7), expect("h1", "==", 0), expect("singular_found", "==", 0),
         expect("basis_contains_L", "==", True)),
        fixed_d=2, n_rule=lambda d: 2,
        notes=("smoothness is checked at sampled points only",),
    ),
    Scenario(
        "n21",
        "three general twistor fibers off every (1,1) surface have h0(I_A(1,2)) = 3 with an "
        "irreducible member and the three connecting fibers in the base locus",
        _n21,
        (expect("h0", "==", 3), expect("h1", "==", 0), expect("irreducible", "==", True),
         expect("connecting_contained", "==", 3)),
        fixed_d=2, n_rule=lambda d: 3,
    ),
    Scenario(
        "bo2-aaa1",
        "four collinear twistor fibers off every (1,1) surface span a pencil of (1,2) surfaces "
        "with exactly four reducible members, every member singular along L",
        _bo2_aaa1,
        (expect("h0", "==", 2), expect("reducible_count", "==", 4),
         expect("pairwise_non_proportional", "==", True), expect("irreducible_products", "==", 0),
         expect("member_irreducible", "==", True), expect("tested_members", "==", 5),
         expect("singular_along_L", "==", Ref("tested_members"))),
        fixed_d=2, n_rule=lambda d: 4,
        notes=("singularity is checked for a random member and the four reducible members "
               "at the first fiber_samples points of L",),
    ),
    Scenario(
        "bo5",
        "every (1,d) surface through d+3 collinear twistor fibers has a (1,1) component "
        "containing at least four of them",
        _bo5,
        (expect("member_irreducible", "==", False), expect("off_factors_divide", "==", True),
         expect("cofactor_conics", ">=", 4)),
        n_rule=lambda d: d + 3,
        constraints=((lambda d, n: d >= 2, "d must be at least 2"),),
        notes=("instances come from the circle family: four fibers on p1*l1 - r^2*p2*l2, "
               "d-1 more on the same line",),
    ),
    Scenario(
        "n6-probe",
        "no irreducible surface of bidegree (1,2) contains 5 general or circle-family twistor "
        "fibers; irreducible members through 5 collinear fibers are reported",
        _irreducible_search,
        (expect("irreducible_off_collinear", "==", 0),),
        fixed_d=2, n_rule=lambda d: 5,
        notes=("draws rotate through general, collinear and circle-family configurations",
               "discrepancy: 5 collinear twistor fibers with no 4 on a (1,1) surface can have "
               "h0(I_A(1,2)) = 1 with an irreducible member (seed 15471431920398990283 "
               "gives h0 = 1, h1 = 6, vertical gcd 1), so the claim is only checked off the "
               "collinear draws; collinear_counterexample counts the collinear hits",),
    ),
    Scenario(
        "n7-probe",
        "no irreducible surface of bidegree (1,3) contains 6 general or circle-family twistor "
        "fibers; irreducible members through 6 collinear fibers are reported",
        _irreducible_search,
        (expect("irreducible_off_collinear", "==", 0),),
        fixed_d=3, n_rule=lambda d: 6, default_trials=9,
        notes=("draws rotate through general, collinear and circle-family configurations",
               "discrepancy: collinear draws are reported through collinear_counterexample "
               "and not checked, as for n6-probe",),
    ),
    Scenario(
        "primo-caso",
        "the j-invariant surface p1*l1 - p2*l2 contains exactly the twistor fibers over "
        "[0:1:w] with |w| = 1, plus the six coordinate fibers",
        _primo_caso,
        (expect("listed_fibers", "==", 5), expect("coordinate_fibers", "==", 6),
         expect("circle_fiber_contained", "==", True), expect("off_circle_contained", "==", False),
         expect("j_invariant", "==", True), expect("irreducible", "==", True),
         expect("general_triple_h0", "==", 0)),
        fixed_d=1, n_rule=lambda d: 3,
    ),
    Scenario(
        "fiber-consistency",
        "x and j(x) lie on the twistor fiber over conj(p) x l, and the cross-product "
        "disjointness test agrees with solving the incidence equations",
        _fiber_consistency,
        (expect("pairs_checked", "==", 200), expect("meeting_pairs", "==", 100),
         expect("x_off_fiber", "==", 0), expect("jx_off_fiber", "==", 0),
         expect("projection_moved_by_j", "==", 0), expect("criteria_disagree", "==", 0),
         expect("common_point_off_pair", "==", 0), expect("meeting_pair_missed", "==", 0)),
        fixed_d=1, n_rule=lambda d: 2, default_trials=2,
        notes=("every trial checks 200 seeded points and pairs, alternating random and "
               "meeting pairs",),
    ),
    Scenario(
        "aaa1-ledger",
        "d+2 general twistor fibers have (h0, h1) = (0, 1) at (1,d), which contradicts a "
        "recorded claim of h1 = 0",
        _aaa1_ledger,
        (expect("h0", "==", 0), expect("h1", "==", 1)),
        n_rule=lambda d: d + 2,
        notes=("discrepancy: chi(I_A(1,d)) = -1 at n = d+2 forces h1 >= 1, so the claimed "
               "h1 = 0 cannot hold; claimed_h1 is reported for comparison",),
    ),
)

REGISTRY: Dict[str, Scenario] = {s.name: s for s in _SCENARIOS}


def get_scenario(name: str) -> Scenario:
    """
    Raises:
        UnknownScenario: If name is not registered
    """
    try:
        return REGISTRY[name]
    except KeyError:
        raise UnknownScenario(
            f"Unknown scenario {name!r}; choose from {', '.join(REGISTRY)}"
        ) from None


def list_scenarios() -> List[Scenario]:
    return list(REGISTRY.values())
