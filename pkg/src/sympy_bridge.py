"""
Conversions between flagtwist's exact types and sympy expressions.

sympy is used where a general polynomial algorithm is needed (gcd over Q(i))
and for reading human-written surface equations.
"""

from fractions import Fraction
from typing import Dict, Sequence, Tuple

import sympy
from sympy.polys.domains import QQ_I
from sympy.polys.polyerrors import BasePolynomialError

from src.errors import ConfigParseError
from src.gaussrat import GaussRat

P_SYMBOLS = sympy.symbols("p0 p1 p2")
L_SYMBOLS = sympy.symbols("l0 l1 l2")


def _rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def to_sympy(x: GaussRat) -> sympy.Expr:
    """Return x as a sympy number a + b*I."""
    return _rational(x.re) + sympy.I * _rational(x.im)


def from_sympy(value: sympy.Expr) -> GaussRat:
    """
    Convert an exact sympy number in Q(i) back to a GaussRat.

    Raises:
        TypeError: If value is not an exact Gaussian rational
    """
    re_part, im_part = sympy.expand(value).as_real_imag()
    if not (re_part.is_Rational and im_part.is_Rational):
        raise TypeError(f"Not an exact Gaussian rational: {value}")
    return GaussRat(
        Fraction(int(re_part.p), int(re_part.q)),
        Fraction(int(im_part.p), int(im_part.q)),
    )


def terms_to_poly(terms: Dict[Tuple[int, ...], GaussRat], gens: Sequence[sympy.Symbol]) -> sympy.Poly:
    """Build a sympy Poly over QQ_I from an exponent -> coefficient map."""
    expr = sympy.Integer(0)
    for exponents, coeff in terms.items():
        monomial = sympy.Integer(1)
        for g, e in zip(gens, exponents):
            monomial *= g ** e
        expr += to_sympy(coeff) * monomial
    return sympy.Poly(expr, *gens, domain=QQ_I)


def poly_to_terms(poly: sympy.Poly) -> Dict[Tuple[int, ...], GaussRat]:
    """Read a sympy Poly back into an exponent -> GaussRat map (zeros dropped)."""
    out = {}
    for exponents, coeff in poly.as_dict(native=False).items():
        value = from_sympy(coeff)
        if value:
            out[tuple(int(e) for e in exponents)] = value
    return out


def parse_bihomogeneous(text: str) -> Dict[Tuple[int, ...], GaussRat]:
    """
    Parse an expression in p0..p2, l0..l2 (imaginary unit I) into a
    6-exponent -> coefficient map.

    Raises:
        ConfigParseError: If the text is not a polynomial in those variables
    """
    names = {str(s): s for s in P_SYMBOLS + L_SYMBOLS}
    names["I"] = sympy.I
    try:
        expr = sympy.parse_expr(text, local_dict=names)
        poly = sympy.Poly(sympy.expand(expr), *(P_SYMBOLS + L_SYMBOLS), domain=QQ_I)
    except (sympy.SympifyError, BasePolynomialError, SyntaxError, TypeError) as exc:
        raise ConfigParseError(f"Cannot parse form {text!r}: {exc}") from exc
    return poly_to_terms(poly)
