"""
Gaussian Rationals - flagtwist

Exact elements of Q(i), the coefficient field used by every other module.
Values are immutable and always stored in canonical form (real and imaginary
parts as reduced fractions with positive denominators), so equality is a
structural comparison.
"""

import re
from fractions import Fraction
from typing import Dict, Union

from src.errors import ConfigParseError

Scalar = Union["GaussRat", int, Fraction]

_FRACTION_PATTERN = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_fraction(text: str) -> Fraction:
    """
    Parse a "num/den" (or bare integer) string into a reduced Fraction.

    Non-reduced input is accepted and reduced silently.

    Args:
        text: The fraction string, e.g. "3/5", "-6/4" or "7"

    Returns:
        Fraction: The reduced value

    Raises:
        TypeError: If text is not a string
        ConfigParseError: If text is not a fraction or has a zero denominator

    Examples:
        >>> parse_fraction("-6/4")
        Fraction(-3, 2)
        >>> parse_fraction("5")
        Fraction(5, 1)
    """
    if not isinstance(text, str):
        raise TypeError(f"Fraction must be a string, got {type(text).__name__}")

    match = _FRACTION_PATTERN.match(text)
    if match is None:
        raise ConfigParseError(f"Not a fraction string: {text!r}")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ConfigParseError(f"Zero denominator in {text!r}")
    return Fraction(numerator, denominator)


def format_fraction(value: Fraction) -> str:
    """Render a Fraction as the canonical "num/den" string."""
    return f"{value.numerator}/{value.denominator}"


def _as_fraction(value: Union[int, Fraction], name: str) -> Fraction:
    # bool is an int subclass; reject it along with floats
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(
            f"{name} must be an int or Fraction, got {type(value).__name__}"
        )
    return Fraction(value)


class GaussRat:
    """
    An exact Gaussian rational re + im*i.

    Attributes:
        re (Fraction): Real part
        im (Fraction): Imaginary part

    Examples:
        >>> x = GaussRat(Fraction(3, 5), Fraction(4, 5))
        >>> x * x.conj()
        GaussRat(1)
        >>> GaussRat(0, 1) ** 2 == -1
        True
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re: Union[int, Fraction] = 0, im: Union[int, Fraction] = 0):
        self._re = _as_fraction(re, "Real part")
        self._im = _as_fraction(im, "Imaginary part")

    @classmethod
    def coerce(cls, value: Scalar) -> "GaussRat":
        """Return value as a GaussRat, accepting ints and Fractions."""
        if isinstance(value, GaussRat):
            return value
        return cls(value)

    @classmethod
    def from_record(cls, record: Dict[str, str]) -> "GaussRat":
        """
        Build a GaussRat from its serialized {"re": "a/b", "im": "c/d"} form.

        Raises:
            ConfigParseError: If a field is missing or malformed
        """
        try:
            return cls(parse_fraction(record["re"]), parse_fraction(record["im"]))
        except KeyError as exc:
            raise ConfigParseError(f"Missing field {exc.args[0]!r} in scalar record")

    def to_record(self) -> Dict[str, str]:
        """Serialize as {"re": "num/den", "im": "num/den"}."""
        return {"re": format_fraction(self._re), "im": format_fraction(self._im)}

    # ══════════════════════════════════════════════════════════════════════
    # PROPERTIES
    # ══════════════════════════════════════════════════════════════════════

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    def is_zero(self) -> bool:
        return self._re == 0 and self._im == 0

    def is_real(self) -> bool:
        return self._im == 0

    def conj(self) -> "GaussRat":
        return GaussRat(self._re, -self._im)

    def norm(self) -> Fraction:
        """Return x * conj(x) as a nonnegative Fraction."""
        return self._re * self._re + self._im * self._im

    def inverse(self) -> "GaussRat":
        """
        Return the multiplicative inverse.

        Raises:
            ZeroDivisionError: If the value is zero
        """
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("GaussRat inverse of zero")
        return GaussRat(self._re / n, -self._im / n)

    def bit_size(self) -> int:
        """Total bit length of all numerators and denominators (pivot cost)."""
        return (
            abs(self._re.numerator).bit_length()
            + self._re.denominator.bit_length()
            + abs(self._im.numerator).bit_length()
            + self._im.denominator.bit_length()
        )

    # ══════════════════════════════════════════════════════════════════════
    # ARITHMETIC
    # ══════════════════════════════════════════════════════════════════════

    def __add__(self, other: Scalar) -> "GaussRat":
        if not isinstance(other, (GaussRat, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        other = GaussRat.coerce(other)
        return GaussRat(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self._re, -self._im)

    def __sub__(self, other: Scalar) -> "GaussRat":
        if not isinstance(other, (GaussRat, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        other = GaussRat.coerce(other)
        return GaussRat(self._re - other._re, self._im - other._im)

    def __rsub__(self, other: Scalar) -> "GaussRat":
        return GaussRat.coerce(other) - self

    def __mul__(self, other: Scalar) -> "GaussRat":
        if not isinstance(other, (GaussRat, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        other = GaussRat.coerce(other)
        return GaussRat(
            self._re * other._re - self._im * other._im,
            self._re * other._im + self._im * other._re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "GaussRat":
        if not isinstance(other, (GaussRat, int, Fraction)) or isinstance(other, bool):
            return NotImplemented
        return self * GaussRat.coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "GaussRat":
        return GaussRat.coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "GaussRat":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"Exponent must be a nonnegative int, got {exponent!r}")
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ══════════════════════════════════════════════════════════════════════
    # COMPARISON AND DISPLAY
    # ══════════════════════════════════════════════════════════════════════

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GaussRat):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        return NotImplemented

    def __hash__(self) -> int:
        # Matches hash(int) / hash(Fraction) for real values
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __str__(self) -> str:
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return f"{self._im}i"
        sign = "+" if self._im > 0 else "-"
        return f"{self._re}{sign}{abs(self._im)}i"

    def __repr__(self) -> str:
        return f"GaussRat({self})"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)
