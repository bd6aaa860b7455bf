"""
Tests for LinearSystem, random members and divisibility modulo the flag form
"""

import random

import pytest
from hypothesis import assume, given, settings as hyp_settings, strategies as st

from src.bipoly import BiForm, flag_form, multiply, normal_form, span_contains
from src.config_generator import ConfigMode, random_config, random_conic
from src.curves import Conic
from src.errors import BadParams, BidegreeMismatch, EmptySystem, NotDisjoint, ZeroDivisor
from src.flag_geometry import Configuration, make_twistor_fiber
from src.formulas import collinear_h1_bound, general_h0, pullback_h0, pullback_h1, surface_h0_01, surface_h0_10
from src.linear_system import (
    LinearSystem,
    complete_intersection_h0,
    divide_with_witness,
    divides,
    ideal_dims,
    random_member,
    system_basis,
)
from src.proj_point import ProjPoint
from src.settings import FlagTwistSettings
from src.surface_analysis import is_irreducible

E0 = ProjPoint.unit(0)
SAMPLING = FlagTwistSettings(_env_file=None, log_level="WARNING")


def twistor(n, seed, settings, mode=ConfigMode.GENERAL):
    return random_config(n, mode, True, seed=seed, settings=settings)


class TestDimensions:
    """Test h0, h1 and chi."""

    def test_one_fiber(self):
        """Test that one twistor fiber imposes three conditions on (1,1)."""
        config = Configuration([make_twistor_fiber(E0)])
        assert LinearSystem(config, (1, 1)).dims() == (5, 0, 5)

    def test_empty_configuration(self):
        """Test that no conics impose no conditions."""
        system = LinearSystem(Configuration(), (1, 2))
        assert system.dims() == (15, 0, 15)
        assert system.to_record()["flags"] == {}

    def test_coordinate_triple(self):
        """Test the fibers over e0, e1, e2 at (1,2)."""
        config = Configuration([make_twistor_fiber(ProjPoint.unit(i)) for i in range(3)])
        assert LinearSystem(config, (1, 2)).dims() == (3, 0, 3)

    def test_collinear_coordinate_triple(self):
        """Test that e0, e1, [1:1:0] leave one j-invariant, irreducible (1,1) form."""
        config = Configuration([make_twistor_fiber(ProjPoint(q)) for q in ([1, 0, 0], [0, 1, 0], [1, 1, 0])])
        system = LinearSystem(config, (1, 1))
        assert system.dims() == (1, 2, -1)
        (form,) = system.basis
        assert form.proportional_to(BiForm.parse("p0*l1 - p1*l0"))
        assert form.proportional_to(form.j_image())
        assert is_irreducible(form)

    def test_single_conic_l_linear(self):
        """Test that exactly one (0,1) surface contains a conic."""
        assert ideal_dims(Configuration([make_twistor_fiber(E0)]), (0, 1)) == (1, 0, 1)

    def test_general_pair(self, settings):
        """Test h0(I_A(1,2)) = 7 for two general twistor fibers."""
        assert ideal_dims(twistor(2, 3, settings), (1, 2)) == (7, 0, 7)

    def test_general_three(self, settings):
        """Test the general prediction for n <= d+1."""
        for d, n in [(1, 2), (2, 3), (3, 4)]:
            h0, h1, _ = ideal_dims(twistor(n, 10 + d, settings), (1, d))
            assert h1 == 0
            assert h0 == general_h0(n, d)

    def test_collinear_excess(self, settings):
        """Test that a collinear triple has h1 above the bound."""
        config = twistor(3, 5, settings, mode=ConfigMode.COLLINEAR)
        _, h1, _ = ideal_dims(config, (1, 2))
        assert h1 >= collinear_h1_bound(3, 2)

    def test_pullback(self, settings):
        """Test h0 and h1 of I_A(0,d)."""
        for n, d in [(2, 2), (3, 2), (4, 2)]:
            h0, h1, _ = ideal_dims(twistor(n, 20 + n, settings), (0, d))
            assert (h0, h1) == (pullback_h0(n, d), pullback_h1(n, d))

    def test_bad_bidegree(self):
        """Test that (0,0) and negative bidegrees are rejected."""
        with pytest.raises(BadParams):
            LinearSystem(Configuration(), (0, 0))
        with pytest.raises(BadParams):
            LinearSystem(Configuration(), (-1, 2))

    def test_meeting_conics(self):
        """Test that a configuration with meeting conics is rejected."""
        config = Configuration([Conic(E0, E0), Conic(ProjPoint([1, 1, 0]), ProjPoint([1, 0, 1]))])
        with pytest.raises(NotDisjoint):
            LinearSystem(config, (1, 1))

    @hyp_settings(deadline=None, max_examples=25)
    @given(st.integers(0, 2 ** 32), st.integers(1, 3), st.sampled_from([(1, 1), (1, 2), (0, 2)]))
    def test_h0_drops_when_a_fiber_is_added(self, seed, n, bidegree):
        """Test that one more twistor fiber lowers h0 by at most a+b+1 and never raises it."""
        config = random_config(n, ConfigMode.GENERAL, True, seed, SAMPLING)
        extra = random_conic(random.Random(seed + 1), SAMPLING, twistor=True)
        assume(all(extra.q != conic.q for conic in config))
        before = LinearSystem(config, bidegree).h0
        after = LinearSystem(config.extended(extra), bidegree).h0
        assert before - sum(bidegree) - 1 <= after <= before


class TestBasis:
    """Test bases and members."""

    def test_basis_vanishes_on_conics(self, settings):
        """Test that every basis form contains every conic."""
        config = twistor(2, 8, settings)
        basis = system_basis(config, (1, 2))
        assert len(basis) == 7
        for form in basis:
            assert form == normal_form(form)
            for conic in config:
                assert form.restrict(conic.parametrization()).is_zero()

    def test_random_member(self, settings):
        """Test that members are seeded and lie in the span of the basis."""
        basis = system_basis(twistor(3, 4, settings), (1, 2))
        member = random_member(basis, seed=1, settings=settings)
        assert member == random_member(basis, seed=1, settings=settings)
        assert span_contains(basis, member)
        assert not member.is_zero()

    def test_empty_member(self):
        """Test that an empty basis has no members."""
        with pytest.raises(EmptySystem):
            random_member([], seed=0)


class TestDivisibility:
    """Test division modulo Phi."""

    def test_divides(self):
        """Test that l0 divides p2*l0 with quotient p2."""
        assert divides(BiForm.parse("l0"), BiForm.parse("p2*l0")) == BiForm.parse("p2")

    def test_does_not_divide(self):
        """Test that l0 does not divide p1*l1 - p2*l2."""
        assert divides(BiForm.parse("l0"), BiForm.parse("p1*l1 - p2*l2")) is None

    def test_divides_modulo_phi(self):
        """Test that p1*l1 + p2*l2 = -p0*l0 modulo Phi is divisible by l0."""
        form = BiForm.parse("p1*l1 + p2*l2")
        h, k = divide_with_witness(BiForm.parse("l0"), form)
        assert multiply(BiForm.parse("l0"), h) + multiply(flag_form(), k) == form

    def test_zero_divisor(self):
        """Test that Phi is not a divisor."""
        with pytest.raises(ZeroDivisor):
            divides(flag_form(), BiForm.parse("p0*l1**2"))

    def test_divisor_too_big(self):
        """Test that the divisor cannot exceed the form's bidegree."""
        with pytest.raises(BidegreeMismatch):
            divides(BiForm.parse("l0**2"), BiForm.parse("p0*l1"))


class TestCompleteIntersection:
    """Test sections on surfaces of F."""

    def test_p_linear_surface(self):
        """Test the (1,0) surface p0 = 0."""
        assert complete_intersection_h0(BiForm.parse("p0"), (1, 2)) == surface_h0_10(1, 2)

    def test_l_linear_surface(self):
        """Test the (0,1) surface l0 = 0."""
        assert complete_intersection_h0(BiForm.parse("l0"), (1, 2)) == surface_h0_01(1, 2)
