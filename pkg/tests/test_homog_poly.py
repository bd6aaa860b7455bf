"""
Tests for HomogPoly3 and the Q(i) gcd
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from src.errors import AllZero, BidegreeMismatch
from src.gaussrat import I, GaussRat
from src.homog_poly import HomogPoly3, exponent_triples, gcd_homog

l0, l1, l2 = (HomogPoly3.variable(i) for i in range(3))

small = st.builds(GaussRat, st.integers(-3, 3), st.integers(-3, 3))
nonzero_small = small.filter(bool)


def homog(degree):
    triples = exponent_triples(degree)
    return st.lists(small, min_size=len(triples), max_size=len(triples)).map(
        lambda coeffs: HomogPoly3(degree, dict(zip(triples, coeffs)))
    ).filter(lambda p: not p.is_zero())


class TestExponentTriples:
    """Test monomial enumeration."""

    def test_degree_two_order(self):
        """Test that degree-2 triples come out lex descending."""
        assert exponent_triples(2) == [
            (2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 2, 0), (0, 1, 1), (0, 0, 2),
        ]

    def test_counts(self):
        """Test that there are C(d+2,2) triples of degree d."""
        assert [len(exponent_triples(d)) for d in range(5)] == [1, 3, 6, 10, 15]

    def test_negative_degree(self):
        """Test that a negative degree is rejected."""
        with pytest.raises(ValueError, match="negative"):
            exponent_triples(-1)


class TestHomogPoly3:
    """Test construction and arithmetic."""

    def test_wrong_degree_monomial(self):
        """Test that a monomial of the wrong degree is rejected."""
        with pytest.raises(BidegreeMismatch):
            HomogPoly3(2, {(1, 0, 0): 1})

    def test_zero_coefficients_dropped(self):
        """Test that zero coefficients leave an empty support."""
        p = HomogPoly3(1, {(1, 0, 0): 0})
        assert p.is_zero()
        assert p.degree == 1

    def test_add_mismatched_degrees(self):
        """Test that adding different degrees is an error."""
        with pytest.raises(BidegreeMismatch):
            l0 + l0 * l1

    def test_product_and_evaluate(self):
        """Test (l0 + l1)(l0 - l1) = l0^2 - l1^2 at a point."""
        p = (l0 + l1) * (l0 - l1)
        assert p.degree == 2
        assert p == l0 * l0 - l1 * l1
        assert p.evaluate([3, 1, 7]) == 8
        assert p.evaluate([I, 0, 0]) == -1

    def test_leading_and_monic(self):
        """Test that monic scales the lex-largest coefficient to 1."""
        p = (l1 * l2).scale(2) + (l0 * l2).scale(GaussRat(0, 4))
        assert p.leading_exponent() == (1, 0, 1)
        m = p.monic()
        assert m.coefficient((1, 0, 1)) == 1
        assert m.coefficient((0, 1, 1)) == GaussRat(0, Fraction(-1, 2))

    def test_zero_has_no_leading_term(self):
        """Test that the zero polynomial has no leading term."""
        with pytest.raises(AllZero):
            HomogPoly3(2).leading_exponent()

    def test_constant(self):
        """Test the constant polynomial."""
        one = HomogPoly3.constant(1)
        assert one.is_constant()
        assert not l0.is_constant()
        assert str(l0 * l1) == "l0*l1"


class TestGcd:
    """Test gcd_homog."""

    def test_common_variable(self):
        """Test gcd(l0*l1, l0^2) = l0."""
        assert gcd_homog([l0 * l1, l0 * l0]) == l0

    def test_coprime(self):
        """Test that coprime inputs give the constant 1."""
        assert gcd_homog([l0, l1, l2]) == HomogPoly3.constant(1)

    def test_gaussian_factor(self):
        """Test a common factor with an imaginary coefficient."""
        f = l0 + l1.scale(I)
        g = gcd_homog([f * l2, f * l1, (f * f).scale(3)])
        assert g == f

    def test_result_is_monic(self):
        """Test that the gcd is normalized even when inputs are scaled."""
        f = (l1 + l2).scale(5)
        g = gcd_homog([f * l0, f * l1])
        assert g == l1 + l2

    def test_zero_inputs_ignored(self):
        """Test that zero polynomials do not change the gcd."""
        assert gcd_homog([HomogPoly3(2), l0 * l1]) == l0 * l1

    def test_all_zero(self):
        """Test that an all-zero input raises AllZero."""
        with pytest.raises(AllZero):
            gcd_homog([HomogPoly3(1), HomogPoly3(3)])

    def test_vertical_vector_of_quadric(self):
        """Test that 2*l1*l2, -l0*l2, -l0*l1 are coprime."""
        g = gcd_homog([(l1 * l2).scale(2), -(l0 * l2), -(l0 * l1)])
        assert g == HomogPoly3.constant(1)

    @hyp_settings(deadline=None, max_examples=30)
    @given(homog(1), homog(1), homog(1), nonzero_small, nonzero_small)
    def test_scaling_invariance(self, f, g, h, a, b):
        """Test that scaling the inputs by nonzero constants keeps the gcd."""
        polys = [f * g, f * h]
        expected = gcd_homog(polys)
        assert expected.degree >= 1
        assert gcd_homog([polys[0].scale(a), polys[1].scale(b)]) == expected

    @hyp_settings(deadline=None, max_examples=30)
    @given(homog(1), homog(1), homog(1), homog(1))
    def test_associativity(self, f, x, y, z):
        """Test gcd(gcd(a, b), c) = gcd(a, b, c) = gcd(a, gcd(b, c))."""
        a, b, c = f * x, f * y, f * z
        together = gcd_homog([a, b, c])
        assert gcd_homog([gcd_homog([a, b]), c]) == together
        assert gcd_homog([a, gcd_homog([b, c])]) == together
