"""
Closed-Form Predictions - flagtwist

Integer formulas that the linear-system computations are checked against.
All functions are exact and take nonnegative integers.
"""

from math import comb
from typing import Tuple


def _c2(x: int) -> int:
    """C(x, 2), zero for x < 2."""
    return comb(x, 2) if x >= 2 else 0


# ══════════════════════════════════════════════════════════════════════
# SECTION COUNTS
# ══════════════════════════════════════════════════════════════════════

def flag_h0(a: int, b: int) -> int:
    """
    Sections of O_F(a,b): (a+1)(b+1)(a+b+2)/2.

    Examples:
        >>> flag_h0(1, 1), flag_h0(1, 2), flag_h0(1, 3)
        (8, 15, 24)
    """
    return (a + 1) * (b + 1) * (a + b + 2) // 2


def flag_multiple_dim(a: int, b: int) -> int:
    """Dimension of Phi * (bidegree (a-1,b-1) forms); zero if a or b is zero."""
    if a < 1 or b < 1:
        return 0
    return _c2(a + 1) * _c2(b + 1)


def conditions_per_config(n: int, a: int, b: int) -> int:
    """h0(O_A(a,b)) = n(a+b+1) for n disjoint conics."""
    return n * (a + b + 1)


def euler_characteristic(n: int, a: int, b: int) -> int:
    """chi(I_A(a,b)) = h0(O_F(a,b)) - n(a+b+1)."""
    return flag_h0(a, b) - conditions_per_config(n, a, b)


def surface_h0_10(a: int, b: int) -> int:
    """Sections of O(a,b) on a (1,0) surface: a(b+1) + C(b+2,2)."""
    return a * (b + 1) + _c2(b + 2)


def surface_h0_01(a: int, b: int) -> int:
    """Sections of O(a,b) on a (0,1) surface: b(a+1) + C(a+2,2)."""
    return b * (a + 1) + _c2(a + 2)


# ══════════════════════════════════════════════════════════════════════
# IDEAL DIMENSIONS
# ══════════════════════════════════════════════════════════════════════

def pullback_h0(n: int, d: int) -> int:
    """
    h0(I_A(0,d)) for n disjoint conics: C(d-n+2, 2) when n <= d+1, else 0.
    """
    if n > d + 1:
        return 0
    return _c2(d - n + 2)


def pullback_h1(n: int, d: int) -> int:
    """h1(I_A(0,d)): n(n-1)/2 when n <= d+1, else n(d+1) - (d+2)(d+1)/2."""
    if n <= d + 1:
        return n * (n - 1) // 2
    return n * (d + 1) - (d + 2) * (d + 1) // 2


def general_h0(n: int, d: int) -> int:
    """h0(I_A(1,d)) = (d+1)(d+3) - n(d+2) when h1 = 0."""
    return (d + 1) * (d + 3) - n * (d + 2)


def collinear_h1_bound(n: int, d: int) -> int:
    """Lower bound n - 2 + max(0, n - (d+1)) on h1(I_A(1,d)) for collinear A."""
    return n - 2 + max(0, n - (d + 1))


# ══════════════════════════════════════════════════════════════════════
# INTERSECTION THEORY
# ══════════════════════════════════════════════════════════════════════

def bidegree_of_intersection(first: Tuple[int, int], second: Tuple[int, int]) -> Tuple[int, int]:
    """
    Bidegree of the curve cut by surfaces of bidegrees (a,b) and (c,d):
    (ad + b(c+d), a(c+d) + bc).

    Examples:
        >>> bidegree_of_intersection((1, 1), (1, 1))
        (3, 3)
        >>> bidegree_of_intersection((1, 2), (1, 1))
        (5, 4)
    """
    a, b = first
    c, d = second
    if min(a, b, c, d) < 0:
        raise ValueError(f"Bidegrees must be nonnegative, got {first}, {second}")
    return (a * d + b * (c + d), a * (c + d) + b * c)


def containment_forced(surface: Tuple[int, int], n: int, system: Tuple[int, int]) -> bool:
    """
    True when an irreducible surface of bidegree (a,b) through n disjoint
    conics must lie in every member of |I_A(c,d)|.

    Requires c, d > 0 and one of: ad + b(c+d) < n; a(c+d) + bc < n; both
    equal to n.
    """
    c, d = system
    if c <= 0 or d <= 0:
        return False
    x, y = bidegree_of_intersection(surface, system)
    return x < n or y < n or (x == n and y == n)
