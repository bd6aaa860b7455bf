"""
Projective Points - flagtwist

Exact points of P^2 over Q(i) in canonical form (first nonzero coordinate
scaled to 1), plus the bilinear dot and cross products on coordinate
vectors. No conjugation is implied by dot or cross; callers conjugate
explicitly.
"""

from typing import Dict, List, Sequence, Tuple

from src.errors import AllZero, DegenerateCross
from src.gaussrat import ONE, ZERO, GaussRat, Scalar

Vector3 = Tuple[GaussRat, GaussRat, GaussRat]


def as_vector(coords: Sequence[Scalar]) -> Vector3:
    if len(coords) != 3:
        raise ValueError(f"Expected 3 coordinates, got {len(coords)}")
    return tuple(GaussRat.coerce(x) for x in coords)


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> GaussRat:
    """Bilinear product u0*v0 + u1*v1 + u2*v2."""
    u, v = as_vector(u), as_vector(v)
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Sequence[Scalar], v: Sequence[Scalar]) -> Vector3:
    """Standard cross product of coordinate vectors."""
    u, v = as_vector(u), as_vector(v)
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def is_zero_vector(v: Sequence[Scalar]) -> bool:
    return all(not GaussRat.coerce(x) for x in v)


class ProjPoint:
    """
    A point [x0:x1:x2] of the projective plane.

    Equality is projective equality because coordinates are stored in
    canonical form.

    Examples:
        >>> ProjPoint([2, 4, 0]) == ProjPoint([1, 2, 0])
        True
        >>> ProjPoint([0, 1, GaussRat(0, 1)]).conj()
        ProjPoint([0:1:-1i])
    """

    __slots__ = ("_coords",)

    def __init__(self, coords: Sequence[Scalar]):
        """
        Raises:
            AllZero: If every coordinate is zero
        """
        vector = as_vector(coords)
        lead = next((x for x in vector if x), None)
        if lead is None:
            raise AllZero("A projective point needs a nonzero coordinate")
        inv = lead.inverse()
        self._coords = tuple(x * inv for x in vector)

    @classmethod
    def unit(cls, index: int) -> "ProjPoint":
        coords = [ZERO, ZERO, ZERO]
        coords[index] = ONE
        return cls(coords)

    @classmethod
    def from_record(cls, record: Sequence[Dict[str, str]]) -> "ProjPoint":
        return cls([GaussRat.from_record(r) for r in record])

    def to_record(self) -> List[Dict[str, str]]:
        return [x.to_record() for x in self._coords]

    @property
    def coords(self) -> Vector3:
        return self._coords

    def __getitem__(self, index: int) -> GaussRat:
        return self._coords[index]

    def __iter__(self):
        return iter(self._coords)

    def __len__(self) -> int:
        return 3

    def conj(self) -> "ProjPoint":
        return ProjPoint([x.conj() for x in self._coords])

    def dot(self, other: Sequence[Scalar]) -> GaussRat:
        return dot(self._coords, other)

    def cross(self, other: Sequence[Scalar]) -> "ProjPoint":
        """
        Raises:
            DegenerateCross: If the two points are projectively equal
        """
        c = cross(self._coords, other)
        if is_zero_vector(c):
            raise DegenerateCross(f"Cross product of {self} and {other} vanishes")
        return ProjPoint(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self._coords == other._coords

    def __hash__(self) -> int:
        return hash(self._coords)

    def __str__(self) -> str:
        return "[" + ":".join(str(x) for x in self._coords) + "]"

    def __repr__(self) -> str:
        return f"ProjPoint({self})"


def plane_basis(normal: Sequence[Scalar]) -> Tuple[Vector3, Vector3]:
    """
    Deterministic basis {u, v} of the plane {x : x . normal = 0}.

    With k the first nonzero index of normal, the basis vectors are
    e_j - (normal_j / normal_k) e_k for the two indices j != k, so the
    normal e0 yields (e1, e2).
    """
    n = as_vector(normal)
    k = next((i for i, x in enumerate(n) if x), None)
    if k is None:
        raise AllZero("Plane normal cannot be zero")
    basis = []
    for j in range(3):
        if j == k:
            continue
        v = [ZERO, ZERO, ZERO]
        v[j] = ONE
        v[k] = -(n[j] / n[k])
        basis.append(tuple(v))
    return basis[0], basis[1]
