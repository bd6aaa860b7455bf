"""
Tests for the seeded configuration generator
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings as hyp_settings, strategies as st

from src.config_generator import (
    ConfigMode,
    circle_family_config,
    circle_point,
    circle_surface,
    random_config,
    random_flag_point,
    random_meeting_pair,
)
from src.errors import ExhaustedRetries
from src.flag_geometry import are_disjoint, incidence_common_point


class TestRandomConfig:
    """Test random_config."""

    def test_deterministic(self, settings):
        """Test that the same seed gives the same configuration."""
        a = random_config(3, ConfigMode.GENERAL, False, seed=11, settings=settings)
        b = random_config(3, ConfigMode.GENERAL, False, seed=11, settings=settings)
        assert a == b

    def test_seed_matters(self, settings):
        """Test that different seeds give different configurations."""
        a = random_config(2, ConfigMode.GENERAL, True, seed=1, settings=settings)
        b = random_config(2, ConfigMode.GENERAL, True, seed=2, settings=settings)
        assert a != b

    @hyp_settings(deadline=None, max_examples=15)
    @given(st.integers(0, 2**32), st.integers(1, 5), st.booleans())
    def test_general_position(self, seed, n, twistor):
        """Test that general draws are disjoint and have no collinear triple."""
        config = random_config(n, ConfigMode.GENERAL, twistor, seed=seed)
        assert config.n == n
        assert config.pairwise_disjoint
        assert config.in_c_star
        assert config.all_twistor == twistor

    def test_collinear_mode(self, settings):
        """Test that collinear draws have a witness fiber."""
        config = random_config(4, ConfigMode.COLLINEAR, True, seed=7, settings=settings)
        assert config.category() == "T(4)-"
        witness = config.collinear_witness
        assert all(witness.meets(c) for c in config)

    def test_mode_string(self, settings):
        """Test that the mode may be given as a string."""
        config = random_config(2, "collinear", True, seed=3, settings=settings)
        assert config.n == 2

    def test_n_zero(self):
        """Test that n must be positive."""
        with pytest.raises(ValueError, match="at least one"):
            random_config(0, ConfigMode.GENERAL, True, seed=0)

    def test_exhausted(self, settings):
        """Test that a tiny pool and retry bound exhaust the sampler."""
        tight = settings.model_copy(update={"numerator_bound": 1, "denominator_bound": 1,
                                            "max_sampling_retries": 5})
        with pytest.raises(ExhaustedRetries):
            random_config(8, ConfigMode.GENERAL, True, seed=0, settings=tight)


class TestMeetingPair:
    """Test draws of conics through a common point."""

    def test_pair_meets(self, settings):
        """Test that both criteria see the common point."""
        c1, c2, x = random_meeting_pair(random.Random(5), settings)
        assert c1 != c2
        assert c1.contains_point(x.p, x.l)
        assert c2.contains_point(x.p, x.l)
        assert not are_disjoint(c1, c2)
        assert incidence_common_point(c1, c2) is not None

    def test_flag_point(self, settings):
        """Test that a random flag point satisfies p.l = 0."""
        x = random_flag_point(random.Random(9), settings)
        assert not x.p.dot(x.l)


class TestCircleFamily:
    """Test the j-invariant (1,1) surface and its twistor fibers."""

    def test_circle_point_norm(self):
        """Test that circle points have norm 1."""
        for t in (Fraction(0), Fraction(1, 2), Fraction(-7, 3)):
            assert circle_point(t).norm() == 1

    def test_surface_is_j_invariant(self):
        """Test that p1*l1 - r^2*p2*l2 is fixed by j."""
        surface = circle_surface(Fraction(3, 2))
        assert surface.j_image() == surface

    def test_fibers_on_and_off(self, settings):
        """Test that on-circle fibers lie on the surface and the others do not."""
        family = circle_family_config(3, 2, seed=4, settings=settings)
        assert family.config.n == 5
        assert family.config.all_twistor
        for conic in family.on_circle:
            assert family.surface.restrict(conic.parametrization()).is_zero()
        for conic in family.off_circle:
            assert not family.surface.restrict(conic.parametrization()).is_zero()

    def test_empty_family(self):
        """Test that at least one fiber is required."""
        with pytest.raises(ValueError):
            circle_family_config(0, 0, seed=1)
