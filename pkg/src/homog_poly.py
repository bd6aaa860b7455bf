"""
Homogeneous Polynomials in Three Variables - flagtwist

HomogPoly3 stores a homogeneous polynomial in (l0, l1, l2) as a map from
exponent triples to GaussRat coefficients. It carries the components of the
vertical vector of a (1,d) form, whose gcd decides reducibility.
"""

import logging
from functools import reduce
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from src import sympy_bridge
from src.errors import AllZero, BidegreeMismatch
from src.gaussrat import ZERO, GaussRat, Scalar

logger = logging.getLogger(__name__)

Exponent3 = Tuple[int, int, int]


def exponent_triples(degree: int) -> List[Exponent3]:
    """All exponent triples of the given total degree, lex descending."""
    if degree < 0:
        raise ValueError(f"Degree cannot be negative, got {degree}")
    return [
        (e0, e1, degree - e0 - e1)
        for e0 in range(degree, -1, -1)
        for e1 in range(degree - e0, -1, -1)
    ]


class HomogPoly3:
    """
    A homogeneous polynomial of fixed degree in three variables.

    The zero polynomial has empty support but keeps its declared degree.

    Examples:
        >>> l0 = HomogPoly3.variable(0)
        >>> (l0 * l0).degree
        2
    """

    __slots__ = ("_degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Mapping[Exponent3, Scalar] = None):
        if degree < 0:
            raise ValueError(f"Degree cannot be negative, got {degree}")
        clean: Dict[Exponent3, GaussRat] = {}
        for exponents, value in (coeffs or {}).items():
            if len(exponents) != 3 or sum(exponents) != degree or min(exponents) < 0:
                raise BidegreeMismatch(
                    f"Monomial {exponents} does not have degree {degree}"
                )
            value = GaussRat.coerce(value)
            if value:
                clean[tuple(exponents)] = value
        self._degree = degree
        self._coeffs = clean

    @classmethod
    def variable(cls, index: int) -> "HomogPoly3":
        exponents = [0, 0, 0]
        exponents[index] = 1
        return cls(1, {tuple(exponents): 1})

    @classmethod
    def constant(cls, value: Scalar) -> "HomogPoly3":
        return cls(0, {(0, 0, 0): value})

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coefficients(self) -> Dict[Exponent3, GaussRat]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return self._degree == 0 and not self.is_zero()

    def coefficient(self, exponents: Exponent3) -> GaussRat:
        return self._coeffs.get(tuple(exponents), ZERO)

    def leading_exponent(self) -> Exponent3:
        """Largest exponent triple in the lex order l0 > l1 > l2."""
        if not self._coeffs:
            raise AllZero("Zero polynomial has no leading term")
        return max(self._coeffs)

    def monic(self) -> "HomogPoly3":
        """Scale so the leading coefficient is 1."""
        lead = self._coeffs[self.leading_exponent()]
        return self.scale(lead.inverse())

    # ══════════════════════════════════════════════════════════════════════
    # ARITHMETIC
    # ══════════════════════════════════════════════════════════════════════

    def __add__(self, other: "HomogPoly3") -> "HomogPoly3":
        if other._degree != self._degree:
            raise BidegreeMismatch(
                f"Cannot add degree {self._degree} and degree {other._degree}"
            )
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, ZERO) + c
        return HomogPoly3(self._degree, out)

    def __neg__(self) -> "HomogPoly3":
        return self.scale(-1)

    def __sub__(self, other: "HomogPoly3") -> "HomogPoly3":
        return self + (-other)

    def __mul__(self, other: "HomogPoly3") -> "HomogPoly3":
        if not isinstance(other, HomogPoly3):
            return self.scale(other)
        out: Dict[Exponent3, GaussRat] = {}
        for e, c in self._coeffs.items():
            for f, d in other._coeffs.items():
                key = (e[0] + f[0], e[1] + f[1], e[2] + f[2])
                out[key] = out.get(key, ZERO) + c * d
        return HomogPoly3(self._degree + other._degree, out)

    def scale(self, factor: Scalar) -> "HomogPoly3":
        factor = GaussRat.coerce(factor)
        return HomogPoly3(self._degree, {e: c * factor for e, c in self._coeffs.items()})

    def evaluate(self, point: Sequence[Scalar]) -> GaussRat:
        x = [GaussRat.coerce(v) for v in point]
        total = ZERO
        for (e0, e1, e2), c in self._coeffs.items():
            total = total + c * x[0] ** e0 * x[1] ** e1 * x[2] ** e2
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HomogPoly3):
            return NotImplemented
        return self._degree == other._degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self._degree, frozenset(self._coeffs.items())))

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for e in sorted(self._coeffs, reverse=True):
            c = self._coeffs[e]
            names = [
                f"l{i}" if k == 1 else f"l{i}^{k}" for i, k in enumerate(e) if k
            ]
            monomial = "*".join(names)
            if not monomial:
                parts.append(f"({c})")
            elif c == 1:
                parts.append(monomial)
            else:
                parts.append(f"({c})*{monomial}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HomogPoly3(degree={self._degree}, {self})"


# ══════════════════════════════════════════════════════════════════════
# GCD
# ══════════════════════════════════════════════════════════════════════

def gcd_homog(polys: Iterable[HomogPoly3]) -> HomogPoly3:
    """
    Monic gcd of homogeneous polynomials in three variables over Q(i).

    Zero inputs are ignored. The result is normalized so its leading
    coefficient (lex order l0 > l1 > l2) is 1.

    Args:
        polys: Nonempty collection of HomogPoly3

    Returns:
        HomogPoly3: The normalized gcd (the constant 1 if coprime)

    Raises:
        AllZero: If every input is the zero polynomial

    Examples:
        >>> l0, l1 = HomogPoly3.variable(0), HomogPoly3.variable(1)
        >>> gcd_homog([l0 * l1, l0 * l0]) == l0
        True
    """
    nonzero = [p for p in polys if not p.is_zero()]
    if not nonzero:
        raise AllZero("gcd of zero polynomials is undefined")

    gens = sympy_bridge.L_SYMBOLS
    converted = [sympy_bridge.terms_to_poly(p.coefficients, gens) for p in nonzero]
    g = reduce(lambda a, b: a.gcd(b), converted)
    terms = sympy_bridge.poly_to_terms(g)
    degree = sum(next(iter(terms))) if terms else 0
    result = HomogPoly3(degree, terms).monic()
    logger.debug("gcd of %d inputs has degree %d", len(nonzero), result.degree)
    return result
