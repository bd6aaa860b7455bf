"""
Curves on the Flag Threefold - flagtwist

This module defines the abstract FlagCurve interface and its two concrete
kinds:
- Conic: the smooth (1,1) curve L_{q,m} = {p.m = 0, q.l = 0} with q.m != 0
- FiberCurve: a fiber of one of the two projections F -> P^2

Every curve can parametrize itself, test whether it passes through a point,
and report its image under the involution j(p, l) = (conj l, conj p).
"""

from abc import ABC, abstractmethod
from enum import Enum
from typing import Dict, Sequence, Tuple

from src.bipoly import BiForm, CurveParam
from src.errors import NotSmooth
from src.proj_point import ProjPoint, cross, dot, is_zero_vector, plane_basis


class FlagCurve(ABC):
    """
    Abstract base class for rational curves on F.

    Abstract Methods (must be implemented by subclasses):
        bidegree: intersection numbers with O(1,0) and O(0,1)
        parametrization(): a CurveParam tracing the curve
        contains_point(p, l): exact incidence test
        j_image(): the image curve under j
    """

    @property
    @abstractmethod
    def bidegree(self) -> Tuple[int, int]:
        pass

    @abstractmethod
    def parametrization(self) -> CurveParam:
        pass

    @abstractmethod
    def contains_point(self, p: Sequence, l: Sequence) -> bool:
        pass

    @abstractmethod
    def j_image(self) -> "FlagCurve":
        pass


# ══════════════════════════════════════════════════════════════════════
# CONICS
# ══════════════════════════════════════════════════════════════════════

class Conic(FlagCurve):
    """
    The bidegree (1,1) curve L_{q,m} = {(p, l) in F : p.m = 0, q.l = 0}.

    Attributes:
        q (ProjPoint): Point fixing the l-line q.l = 0
        m (ProjPoint): Point fixing the p-line p.m = 0
        twistor (bool): True iff m = conj(q)

    Examples:
        >>> c = Conic(ProjPoint([1, 0, 0]), ProjPoint([1, 0, 0]))
        >>> c.twistor
        True
        >>> Conic(ProjPoint([1, 0, 0]), ProjPoint([0, 1, 0]))
        Traceback (most recent call last):
        NotSmooth: ...
    """

    def __init__(self, q: ProjPoint, m: ProjPoint):
        """
        Raises:
            NotSmooth: If q.m = 0
        """
        if not q.dot(m):
            raise NotSmooth(f"Conic with q={q}, m={m} is reducible (q.m = 0)")
        self._q = q
        self._m = m
        self._param = None

    @property
    def q(self) -> ProjPoint:
        return self._q

    @property
    def m(self) -> ProjPoint:
        return self._m

    @property
    def twistor(self) -> bool:
        return self._m == self._q.conj()

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (1, 1)

    def parametrization(self) -> CurveParam:
        if self._param is None:
            self._param = conic_param(self)
        return self._param

    def contains_point(self, p: Sequence, l: Sequence) -> bool:
        return not dot(p, self._m) and not dot(self._q, l)

    def j_image(self) -> "Conic":
        return Conic(self._m.conj(), self._q.conj())

    def defining_forms(self) -> Tuple[BiForm, BiForm]:
        """The (1,0) form p.m and the (0,1) form q.l cutting out the conic."""
        return BiForm.p_linear(self._m.coords), BiForm.l_linear(self._q.coords)

    def to_record(self) -> Dict:
        return {"q": self._q.to_record(), "m": self._m.to_record()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Conic):
            return NotImplemented
        return self._q == other._q and self._m == other._m

    def __hash__(self) -> int:
        return hash((self._q, self._m))

    def __str__(self) -> str:
        if self.twistor:
            return f"twistor fiber over {self._q}"
        return f"conic q={self._q} m={self._m}"

    def __repr__(self) -> str:
        return f"Conic(q={self._q}, m={self._m})"


def conic_param(conic: Conic) -> CurveParam:
    """
    Parametrize L_{q,m} as p(s,t) = s*u + t*v, l(s,t) = p(s,t) x q.

    {u, v} is the deterministic plane_basis of {x : x.m = 0}. The l-map never
    vanishes because q does not lie on the line x.m = 0.

    Raises:
        NotSmooth: If q.m = 0

    Examples:
        q = m = [1:0:0] gives p = [0:s:t] and l = [0:t:-s].
    """
    q, m = conic.q, conic.m
    if not q.dot(m):
        raise NotSmooth(f"Cannot parametrize a reducible conic (q={q}, m={m})")
    u, v = plane_basis(m.coords)
    return CurveParam.from_vectors([u, v], [cross(u, q.coords), cross(v, q.coords)])


# ══════════════════════════════════════════════════════════════════════
# FIBERS OF THE TWO PROJECTIONS
# ══════════════════════════════════════════════════════════════════════

class FiberKind(str, Enum):
    """PI2: l fixed at base, p on the line p.base = 0. PI1: p fixed, l varies."""

    PI2 = "pi2"
    PI1 = "pi1"


class FiberCurve(FlagCurve):
    """
    A fiber of a projection F -> P^2.

    A PI2 fiber over base b is {(p, b) : p.b = 0}, bidegree (1,0); it meets
    L_{q,m} iff q.b = 0. A PI1 fiber over b is {(b, l) : b.l = 0}, bidegree
    (0,1); it meets L_{q,m} iff b.m = 0.
    """

    def __init__(self, kind: FiberKind, base: ProjPoint):
        self._kind = FiberKind(kind)
        self._base = base

    @property
    def kind(self) -> FiberKind:
        return self._kind

    @property
    def base(self) -> ProjPoint:
        return self._base

    @property
    def bidegree(self) -> Tuple[int, int]:
        return (1, 0) if self._kind is FiberKind.PI2 else (0, 1)

    def parametrization(self) -> CurveParam:
        u, v = plane_basis(self._base.coords)
        if self._kind is FiberKind.PI2:
            return CurveParam.from_vectors([u, v], [self._base.coords])
        return CurveParam.from_vectors([self._base.coords], [u, v])

    def contains_point(self, p: Sequence, l: Sequence) -> bool:
        fixed, moving = (l, p) if self._kind is FiberKind.PI2 else (p, l)
        return is_zero_vector(cross(fixed, self._base.coords)) and not dot(moving, self._base)

    def meets(self, conic: Conic) -> bool:
        if self._kind is FiberKind.PI2:
            return not conic.q.dot(self._base)
        return not self._base.dot(conic.m)

    def j_image(self) -> "FiberCurve":
        other = FiberKind.PI1 if self._kind is FiberKind.PI2 else FiberKind.PI2
        return FiberCurve(other, self._base.conj())

    def to_record(self) -> Dict:
        return {"kind": self._kind.value, "base": self._base.to_record()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiberCurve):
            return NotImplemented
        return self._kind == other._kind and self._base == other._base

    def __hash__(self) -> int:
        return hash((self._kind, self._base))

    def __repr__(self) -> str:
        return f"FiberCurve({self._kind.value}, base={self._base})"
