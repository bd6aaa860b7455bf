"""
Tests for GaussRat and fraction parsing

Covers canonical storage, field arithmetic, conjugation and norm, the
serialized record form, and rejection of inexact inputs.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from src.errors import ConfigParseError
from src.gaussrat import I, ONE, ZERO, GaussRat, format_fraction, parse_fraction

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussrats = st.builds(GaussRat, fractions, fractions)


class TestParseFraction:
    """Test parsing of "num/den" strings."""

    def test_reduces(self):
        """Test that non-reduced input is reduced."""
        assert parse_fraction("-6/4") == Fraction(-3, 2)

    def test_bare_integer(self):
        """Test that a missing denominator means 1."""
        assert parse_fraction(" 5 ") == Fraction(5)

    def test_zero_denominator(self):
        """Test that a zero denominator is rejected."""
        with pytest.raises(ConfigParseError, match="Zero denominator"):
            parse_fraction("1/0")

    def test_decimal_rejected(self):
        """Test that decimals are not fractions."""
        with pytest.raises(ConfigParseError, match="Not a fraction"):
            parse_fraction("0.5")

    def test_non_string(self):
        """Test that a non-string raises TypeError."""
        with pytest.raises(TypeError):
            parse_fraction(3)

    def test_format_round_trip(self):
        """Test that formatting gives the canonical num/den string."""
        assert format_fraction(Fraction(6, -4)) == "-3/2"
        assert parse_fraction(format_fraction(Fraction(7, 3))) == Fraction(7, 3)


class TestGaussRatBasics:
    """Test construction, accessors and display."""

    def test_defaults_to_zero(self):
        """Test that GaussRat() is zero."""
        assert GaussRat().is_zero()
        assert not GaussRat()

    def test_float_rejected(self):
        """Test that floats are refused."""
        with pytest.raises(TypeError, match="int or Fraction"):
            GaussRat(0.5)

    def test_bool_rejected(self):
        """Test that bools are refused even though they are ints."""
        with pytest.raises(TypeError):
            GaussRat(True)

    def test_real_equals_int(self):
        """Test that a real GaussRat compares and hashes like its int."""
        assert GaussRat(3) == 3
        assert hash(GaussRat(3)) == hash(3)
        assert GaussRat(Fraction(1, 2)) == Fraction(1, 2)

    def test_str(self):
        """Test the display of real, imaginary and mixed values."""
        assert str(GaussRat(Fraction(3, 5), Fraction(4, 5))) == "3/5+4/5i"
        assert str(-I) == "-1i"
        assert str(GaussRat(2, -1)) == "2-1i"
        assert str(GaussRat(7)) == "7"

    def test_record(self):
        """Test the serialized record form."""
        x = GaussRat(Fraction(-1, 2), 3)
        assert x.to_record() == {"re": "-1/2", "im": "3/1"}
        assert GaussRat.from_record(x.to_record()) == x

    def test_record_missing_field(self):
        """Test that a record without "im" is rejected."""
        with pytest.raises(ConfigParseError, match="im"):
            GaussRat.from_record({"re": "1/1"})


class TestGaussRatArithmetic:
    """Test exact arithmetic in Q(i)."""

    def test_i_squared(self):
        """Test that i^2 = -1."""
        assert I * I == -1
        assert I ** 2 == -1
        assert I ** 4 == 1

    def test_unit_circle_point(self):
        """Test that (3+4i)/5 has norm 1."""
        x = GaussRat(Fraction(3, 5), Fraction(4, 5))
        assert x.norm() == 1
        assert x * x.conj() == ONE

    def test_division(self):
        """Test division by a nonzero value."""
        assert GaussRat(1, 1) / GaussRat(1, -1) == I

    def test_mixed_scalars(self):
        """Test that ints and Fractions combine with GaussRat on both sides."""
        assert 2 * I + 1 == GaussRat(1, 2)
        assert 1 - I == GaussRat(1, -1)
        assert Fraction(1, 2) * GaussRat(2, 2) == GaussRat(1, 1)

    def test_inverse_of_zero(self):
        """Test that inverting zero raises ZeroDivisionError."""
        with pytest.raises(ZeroDivisionError):
            ZERO.inverse()

    def test_negative_exponent(self):
        """Test that negative powers are refused."""
        with pytest.raises(ValueError, match="nonnegative"):
            I ** -1

    def test_bool_operand_rejected(self):
        """Test that adding a bool is a TypeError."""
        with pytest.raises(TypeError):
            I + True

    @hyp_settings(deadline=None, max_examples=60)
    @given(gaussrats, gaussrats, gaussrats)
    def test_field_axioms(self, x, y, z):
        """Test associativity, commutativity and distributivity."""
        assert (x + y) + z == x + (y + z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z

    @hyp_settings(deadline=None, max_examples=60)
    @given(gaussrats)
    def test_inverse(self, x):
        """Test that x * x^-1 = 1 for nonzero x."""
        if x:
            assert x * x.inverse() == ONE

    @hyp_settings(deadline=None, max_examples=60)
    @given(gaussrats, gaussrats)
    def test_conjugation_is_multiplicative(self, x, y):
        """Test that conj(xy) = conj(x) conj(y) and norm is multiplicative."""
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x * y).norm() == x.norm() * y.norm()
