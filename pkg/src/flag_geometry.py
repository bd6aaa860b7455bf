"""
Flag Geometry - flagtwist

Points of F = {p.l = 0}, the twistor projection, incidence predicates on
conics (disjointness, collinearity, connecting fibers) and classification
of conic configurations into the families C(n), T(n), C*(n), T(n)-.
"""

import logging
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from src.curves import Conic, FiberCurve, FiberKind, conic_param  # noqa: F401
from src.errors import (
    DegenerateCross,
    NotOnFlag,
    ParallelData,
    RepeatedConic,
    SameConic,
)
from src.exact_matrix import ExactMatrix, det3
from src.proj_point import ProjPoint, cross, dot, is_zero_vector

logger = logging.getLogger(__name__)


class FlagPoint:
    """
    A point (p, l) of the flag threefold.

    Raises:
        NotOnFlag: If p.l != 0

    Examples:
        >>> x = FlagPoint(ProjPoint([1, 0, 0]), ProjPoint([0, 0, 1]))
        >>> x.j().p
        ProjPoint([0:0:1])
    """

    __slots__ = ("_p", "_l")

    def __init__(self, p: ProjPoint, l: ProjPoint):
        if p.dot(l):
            raise NotOnFlag(f"({p}, {l}) is not on F: p.l = {p.dot(l)}")
        self._p = p
        self._l = l

    @property
    def p(self) -> ProjPoint:
        return self._p

    @property
    def l(self) -> ProjPoint:
        return self._l

    def j(self) -> "FlagPoint":
        """The involution j(p, l) = (conj l, conj p)."""
        return FlagPoint(self._l.conj(), self._p.conj())

    def to_record(self) -> Dict:
        return {"p": self._p.to_record(), "l": self._l.to_record()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FlagPoint):
            return NotImplemented
        return self._p == other._p and self._l == other._l

    def __hash__(self) -> int:
        return hash((self._p, self._l))

    def __repr__(self) -> str:
        return f"FlagPoint({self._p}, {self._l})"


# ══════════════════════════════════════════════════════════════════════
# TWISTOR FIBERS
# ══════════════════════════════════════════════════════════════════════

def make_twistor_fiber(q: ProjPoint) -> Conic:
    """
    The twistor fiber L_{q, conj q}.

    q . conj(q) is a sum of squared moduli, so the conic is always smooth.
    """
    return Conic(q, q.conj())


def twistor_project(p: ProjPoint, l: ProjPoint) -> ProjPoint:
    """
    The twistor projection conj(p) x l.

    Args:
        p: First factor of a point of F
        l: Second factor, with p.l = 0

    Returns:
        ProjPoint: q such that (p, l) lies on make_twistor_fiber(q)

    Raises:
        NotOnFlag: If p.l != 0
        DegenerateCross: If conj(p) is parallel to l

    Examples:
        >>> twistor_project(ProjPoint([1, 0, 0]), ProjPoint([0, 0, 1]))
        ProjPoint([0:1:0])
    """
    if p.dot(l):
        raise NotOnFlag(f"({p}, {l}) is not on F")
    c = cross(p.conj().coords, l.coords)
    if is_zero_vector(c):
        raise DegenerateCross(f"conj({p}) is parallel to {l}")
    return ProjPoint(c)


# ══════════════════════════════════════════════════════════════════════
# PREDICATES ON CONICS
# ══════════════════════════════════════════════════════════════════════

def are_disjoint(c1: Conic, c2: Conic) -> bool:
    """
    Exact disjointness of two conics.

    A common point must have l = q1 x q2 and p = m1 x m2, so the conics meet
    iff those are zero (parallel data) or (q1 x q2).(m1 x m2) = 0.

    Raises:
        SameConic: If the conics are projectively equal
    """
    if c1 == c2:
        raise SameConic(f"{c1!r} and {c2!r} are the same conic")
    qx = cross(c1.q.coords, c2.q.coords)
    mx = cross(c1.m.coords, c2.m.coords)
    if is_zero_vector(qx) or is_zero_vector(mx):
        return False
    return bool(dot(qx, mx))


def incidence_common_point(c1: Conic, c2: Conic) -> Optional[FlagPoint]:
    """
    Solve the four incidence equations of two conics directly.

    p ranges over the nullspace of [m1; m2], l over that of [q1; q2]; a
    common point exists iff some nonzero pair from those spaces has p.l = 0.
    Independent of the cross-product criterion in are_disjoint.
    """
    p_space = ExactMatrix([c1.m.coords, c2.m.coords]).nullspace()
    l_space = ExactMatrix([c1.q.coords, c2.q.coords]).nullspace()
    if len(p_space) == 1 and len(l_space) == 1:
        p, l = p_space[0], l_space[0]
        if dot(p, l):
            return None
        return FlagPoint(ProjPoint(p), ProjPoint(l))
    if len(p_space) == 2 and len(l_space) == 1:
        l = l_space[0]
        a, b = ExactMatrix([[dot(p_space[0], l), dot(p_space[1], l)]]).nullspace()[0]
        p = [a * x + b * y for x, y in zip(p_space[0], p_space[1])]
        return FlagPoint(ProjPoint(p), ProjPoint(l))
    if len(p_space) == 1 and len(l_space) == 2:
        p = p_space[0]
        a, b = ExactMatrix([[dot(p, l_space[0]), dot(p, l_space[1])]]).nullspace()[0]
        l = [a * x + b * y for x, y in zip(l_space[0], l_space[1])]
        return FlagPoint(ProjPoint(p), ProjPoint(l))
    raise SameConic(f"{c1!r} and {c2!r} are the same conic")


def collinear_triple(c1: Conic, c2: Conic, c3: Conic) -> bool:
    """
    True iff one PI2 fiber meets all three conics, i.e. det(q1, q2, q3) = 0.

    Raises:
        RepeatedConic: If two of the q points coincide

    Examples:
        e0, e1, [1:1:0] -> True (witness base e2)
    """
    qs = (c1.q, c2.q, c3.q)
    if len(set(qs)) < 3:
        raise RepeatedConic("Collinearity needs three distinct q points")
    return not det3(*(q.coords for q in qs))


def collinear_witness(conics: Sequence[Conic]) -> Optional[FiberCurve]:
    """
    The PI2 fiber meeting every conic, when the q points all lie on one line.

    Needs two distinct q points to fix the line; returns None otherwise.
    """
    qs = [c.q for c in conics]
    for a, b in combinations(qs, 2):
        base = cross(a.coords, b.coords)
        if not is_zero_vector(base):
            if all(not dot(q.coords, base) for q in qs):
                return FiberCurve(FiberKind.PI2, ProjPoint(base))
            return None
    return None


def connecting_curves(c1: Conic, c2: Conic) -> Tuple[FiberCurve, FiberCurve]:
    """
    The PI2 fiber L over q1 x q2 and the PI1 fiber R over m1 x m2.

    Both meet both conics. For twistor fibers R = j(L).

    Raises:
        ParallelData: If q1 || q2 or m1 || m2
    """
    qx = cross(c1.q.coords, c2.q.coords)
    mx = cross(c1.m.coords, c2.m.coords)
    if is_zero_vector(qx) or is_zero_vector(mx):
        raise ParallelData(f"{c1!r} and {c2!r} share a q or m point")
    return FiberCurve(FiberKind.PI2, ProjPoint(qx)), FiberCurve(FiberKind.PI1, ProjPoint(mx))


# ══════════════════════════════════════════════════════════════════════
# CONFIGURATIONS
# ══════════════════════════════════════════════════════════════════════

class Configuration:
    """
    An ordered list of conics with lazily computed classification flags.

    Attributes:
        conics (tuple): The member conics
        pairwise_disjoint (bool): No two members meet
        all_twistor (bool): Every member is a twistor fiber
        in_c_star (bool): No PI2 fiber meets three members
        collinear_witness (FiberCurve | None): A PI2 fiber meeting all members

    An empty configuration is allowed and imposes no conditions.
    """

    def __init__(self, conics: Sequence[Conic] = ()):
        self._conics = tuple(conics)

    @property
    def conics(self) -> Tuple[Conic, ...]:
        return self._conics

    @property
    def n(self) -> int:
        return len(self._conics)

    def __len__(self) -> int:
        return len(self._conics)

    def __iter__(self):
        return iter(self._conics)

    def __getitem__(self, index: int) -> Conic:
        return self._conics[index]

    @cached_property
    def pairwise_disjoint(self) -> bool:
        return all(are_disjoint(a, b) for a, b in combinations(self._conics, 2))

    @cached_property
    def all_twistor(self) -> bool:
        return all(c.twistor for c in self._conics)

    @cached_property
    def in_c_star(self) -> bool:
        return all(
            det3(a.q.coords, b.q.coords, c.q.coords)
            for a, b, c in combinations(self._conics, 3)
        )

    @cached_property
    def collinear_witness(self) -> Optional[FiberCurve]:
        if self.n < 2:
            return None
        return collinear_witness(self._conics)

    def category(self) -> str:
        """Family label such as "T*(3)", "T(4)-" or "C(2)"."""
        if not self.pairwise_disjoint:
            return f"not disjoint ({self.n} conics)"
        letter = "T" if self.all_twistor else "C"
        star = "*" if self.in_c_star else ""
        minus = "-" if self.n >= 3 and self.collinear_witness is not None else ""
        return f"{letter}{star}({self.n}){minus}"

    def without(self, index: int) -> "Configuration":
        return Configuration(self._conics[:index] + self._conics[index + 1:])

    def extended(self, conic: Conic) -> "Configuration":
        return Configuration(self._conics + (conic,))

    def summary(self) -> Dict:
        """Classification flags as a JSON-ready dict."""
        witness = self.collinear_witness
        return {
            "n": self.n,
            "category": self.category(),
            "pairwise_disjoint": self.pairwise_disjoint,
            "all_twistor": self.all_twistor,
            "in_c_star": self.in_c_star,
            "collinear_witness": None if witness is None else str(witness.base),
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return self._conics == other._conics

    def __repr__(self) -> str:
        return f"Configuration({self.category() if self.n else 'empty'})"


def classify_config(conics: Sequence[Conic]) -> Configuration:
    """
    Build a Configuration and fill every classification flag.

    Raises:
        ValueError: If conics is empty
        SameConic: If two members are projectively equal
    """
    if not conics:
        raise ValueError("Cannot classify an empty list of conics")
    config = Configuration(conics)
    summary = config.summary()
    logger.debug("classified %d conics as %s", config.n, summary["category"])
    return config
